#include "symcc/cycle_algebra.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>

#include "symcc/errors.hpp"

namespace symcc {

// TauBasis -------------------------------------------------------------------

TauBasis::TauBasis(Divisor delta, MultVec e)
    : delta_(std::move(delta)), e_(std::move(e)), delta_key_(delta_.to_string()) {
  if (!delta_.effective()) {
    throw ArgumentError("tau label divisor " + delta_.to_string() + " is not effective");
  }
}

TauBasis TauBasis::parse(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) throw ArgumentError("empty tau label");
  s = s.substr(first);
  if (s.rfind("tau[", 0) == 0) {
    if (s.back() != ']') throw ArgumentError("unterminated tau label '" + std::string(text) + "'");
    s = s.substr(4, s.size() - 5);
  }
  auto semi = s.find(';');
  if (semi == std::string::npos) {
    throw ArgumentError("tau label '" + std::string(text) + "' needs the form 'delta; e'");
  }
  return TauBasis(Divisor::parse(s.substr(0, semi)), MultVec::parse(s.substr(semi + 1)));
}

std::string TauBasis::to_string() const {
  std::string out = "tau[" + delta_.label() + ";";
  if (!e_.empty()) out += " " + e_.to_string();
  return out + "]";
}

// CycleSum -------------------------------------------------------------------

CycleSum CycleSum::term(const TauBasis& b, const Integer& coef) {
  CycleSum z(b.grade());
  z.add(b, coef);
  return z;
}

Integer CycleSum::coef(const TauBasis& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Integer(0) : it->second;
}

void CycleSum::add(const TauBasis& b, const Integer& coef) {
  if (b.grade() != degree_) {
    throw ArgumentError("cannot add " + b.to_string() + " of grade " + std::to_string(b.grade()) +
                        " to a cycle of degree " + std::to_string(degree_));
  }
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(b, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

CycleSum& CycleSum::operator+=(const CycleSum& other) {
  if (other.degree_ != degree_) {
    throw ArgumentError("cannot add cycles of degrees " + std::to_string(degree_) + " and " +
                        std::to_string(other.degree_));
  }
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

CycleSum CycleSum::operator+(const CycleSum& other) const {
  CycleSum r = *this;
  r += other;
  return r;
}

CycleSum CycleSum::operator-(const CycleSum& other) const { return *this + other.scaled(-1); }

CycleSum CycleSum::scaled(const Integer& k) const {
  CycleSum r(degree_);
  if (k == 0) return r;
  for (const auto& [b, c] : terms_) r.terms_.emplace(b, c * k);
  return r;
}

// Structure constants --------------------------------------------------------

namespace {

// A set partition of type e has e_i blocks of size i. Merging it with one of
// type e' (on a disjoint ground set) inside J(A, A') amounts to choosing a
// partial matching between A-blocks and A'-blocks; each matched pair becomes
// one block. M(i, j) counts matched pairs of sizes (i, j). For fixed M the
// number of such C is
//   prod_i e_i! / (r_i! prod_j M_ij!) * prod_j e'_j! / (c_j! prod_i M_ij!) * prod M_ij!
// with r_i, c_j the unmatched counts. Summing f! times that count over M gives
// e! e'! N(e, e'; f).
StructureMap compute_structure_constants(const MultVec& e, const MultVec& e2) {
  const auto& rows = e.entries();
  const auto& cols = e2.entries();
  const std::size_t R = rows.size(), C = cols.size();
  std::vector<unsigned> m(R * C, 0), row_used(R, 0), col_used(C, 0);
  std::map<MultVec, Integer> weighted;

  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == R * C) {
      MultVec f;
      Integer count = 1;
      for (std::size_t a = 0; a < R; ++a) {
        const unsigned unmatched = rows[a].second - row_used[a];
        f.add(rows[a].first, unmatched);
        count *= factorial(rows[a].second);
        count = exact_div(count, factorial(unmatched), "matching count");
      }
      for (std::size_t b = 0; b < C; ++b) {
        const unsigned unmatched = cols[b].second - col_used[b];
        f.add(cols[b].first, unmatched);
        count *= factorial(cols[b].second);
        count = exact_div(count, factorial(unmatched), "matching count");
      }
      for (std::size_t a = 0; a < R; ++a) {
        for (std::size_t b = 0; b < C; ++b) {
          const unsigned k = m[a * C + b];
          f.add(rows[a].first + cols[b].first, k);
          // two M! in the denominator, one M! for the pairings
          count = exact_div(count, factorial(k), "matching count");
        }
      }
      weighted[f] += e_factorial(f) * count;
      return;
    }
    const std::size_t a = cell / C, b = cell % C;
    const unsigned cap = std::min(rows[a].second - row_used[a], cols[b].second - col_used[b]);
    for (unsigned k = 0; k <= cap; ++k) {
      m[cell] = k;
      row_used[a] += k;
      col_used[b] += k;
      rec(cell + 1);
      row_used[a] -= k;
      col_used[b] -= k;
    }
    m[cell] = 0;
  };
  rec(0);

  const Integer denom = e_factorial(e) * e_factorial(e2);
  StructureMap out;
  for (auto& [f, w] : weighted) {
    Integer n = exact_div(w, denom, "structure constant normalization");
    if (n < 0) throw InternalError("negative structure constant");
    if (n != 0) out.emplace(f, std::move(n));
  }
  return out;
}

struct StructureMemo {
  std::shared_mutex mutex;
  std::map<std::pair<MultVec, MultVec>, std::shared_ptr<const StructureMap>> table;
};

StructureMemo& memo() {
  static StructureMemo m;
  return m;
}

}  // namespace

std::shared_ptr<const StructureMap> structure_constants(const MultVec& e, const MultVec& e2) {
  auto key = (e2 < e) ? std::make_pair(e2, e) : std::make_pair(e, e2);
  auto& mm = memo();
  {
    std::shared_lock lock(mm.mutex);
    if (auto it = mm.table.find(key); it != mm.table.end()) return it->second;
  }
  auto value = std::make_shared<const StructureMap>(compute_structure_constants(key.first, key.second));
  std::unique_lock lock(mm.mutex);
  // A concurrent writer may have inserted the same value already.
  return mm.table.emplace(std::move(key), std::move(value)).first->second;
}

StructureMap oracle_product_of_set_partitions(const std::vector<MultVec>& types) {
  unsigned total = 0;
  for (const auto& t : types) total += t.weight();
  if (total > 10) {
    throw RefusalError("set-partition oracle limited to total size 10, got " + std::to_string(total));
  }
  // block_id[x]: global index of the A-block containing x; part_of[x]: which I_k.
  std::vector<unsigned> block_id, part_of;
  unsigned next_block = 0;
  for (unsigned k = 0; k < types.size(); ++k) {
    for (const auto& [size, mult] : types[k].entries()) {
      for (unsigned b = 0; b < mult; ++b, ++next_block) {
        block_id.insert(block_id.end(), size, next_block);
        part_of.insert(part_of.end(), size, k);
      }
    }
  }

  StructureMap out;
  for_each_set_partition(total, [&](const std::vector<unsigned>& rgs, unsigned nblocks) {
    // C n I_k must be a full A_k-block or empty: elements of one A-block share
    // a C-block, and a C-block never holds two A-blocks of the same I_k.
    std::vector<int> owner(static_cast<std::size_t>(nblocks) * types.size(), -1);
    std::vector<int> c_of_block(next_block, -1);
    for (unsigned x = 0; x < total; ++x) {
      const unsigned blk = block_id[x];
      if (c_of_block[blk] == -1) {
        c_of_block[blk] = static_cast<int>(rgs[x]);
      } else if (c_of_block[blk] != static_cast<int>(rgs[x])) {
        return;
      }
      int& slot = owner[rgs[x] * types.size() + part_of[x]];
      if (slot == -1) {
        slot = static_cast<int>(blk);
      } else if (slot != static_cast<int>(blk)) {
        return;
      }
    }
    std::vector<unsigned> sizes(nblocks, 0);
    for (unsigned x = 0; x < total; ++x) ++sizes[rgs[x]];
    MultVec f;
    for (unsigned s : sizes) f.add(s);
    out[f] += e_factorial(f);
  });
  return out;
}

StructureMap oracle_structure_constants(const MultVec& e, const MultVec& e2) {
  if (e.weight() + e2.weight() > 10) {
    throw RefusalError("oracle_structure_constants limited to ||e|| + ||e'|| <= 10");
  }
  StructureMap weighted = oracle_product_of_set_partitions({e, e2});
  const Integer denom = e_factorial(e) * e_factorial(e2);
  StructureMap out;
  for (auto& [f, w] : weighted) out.emplace(f, exact_div(w, denom, "oracle normalization"));
  return out;
}

// Products -------------------------------------------------------------------

CycleSum multiply(const CycleSum& a, const CycleSum& b) {
  CycleSum out(a.degree() + b.degree());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const Divisor delta = ba.delta() + bb.delta();
      const Integer c = ca * cb;
      for (const auto& [f, n] : *structure_constants(ba.e(), bb.e())) {
        out.add(TauBasis(delta, f), c * n);
      }
    }
  }
  return out;
}

CycleSum product_of_set_partitions(const std::vector<MultVec>& types) {
  CycleSum acc = CycleSum::unit();
  for (const auto& t : types) acc = multiply(acc, CycleSum::term(TauBasis(t), e_factorial(t)));
  return acc;
}

// Supports -------------------------------------------------------------------

SupportSet::SupportSet(unsigned grade, std::set<TauBasis> labels) : grade_(grade) {
  for (const auto& b : labels) insert(b);
}

SupportSet SupportSet::of(const CycleSum& z) {
  SupportSet s(z.degree());
  for (const auto& [b, c] : z.terms()) s.insert(b);
  return s;
}

void SupportSet::insert(const TauBasis& b) {
  if (b.grade() != grade_) {
    throw ArgumentError("support label " + b.to_string() + " has grade " + std::to_string(b.grade()) +
                        ", expected " + std::to_string(grade_));
  }
  labels_.insert(b);
}

SupportSet support_vee(const SupportSet& a, const SupportSet& b) {
  SupportSet out(a.grade() + b.grade());
  for (const auto& la : a.labels()) {
    for (const auto& lb : b.labels()) {
      const Divisor delta = la.delta() + lb.delta();
      for (const auto& [f, n] : *structure_constants(la.e(), lb.e())) {
        if (n != 0) out.insert(TauBasis(delta, f));
      }
    }
  }
  return out;
}

std::vector<StratumInfo> stratum_report(unsigned n, const CurveContext& ctx) {
  std::vector<StratumInfo> out;
  for (const auto& lambda : partitions_of(n)) {
    MultVec e = lambda_to_e(lambda);
    bool smooth = true;
    for (const auto& [i, k] : e.entries()) smooth = smooth && ctx.invertible(i);
    out.push_back({e, e.cardinality(), smooth});
  }
  return out;
}

}  // namespace symcc
