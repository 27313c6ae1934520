#include "symcc/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "symcc/errors.hpp"

namespace symcc {

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view context) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ArgumentError("cannot parse '" + std::string(s) + "' as a nonnegative integer in " +
                        std::string(context));
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

// Partition ------------------------------------------------------------------

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ArgumentError("partition parts must be weakly decreasing");
    }
    n_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<unsigned> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<unsigned> parts;
  text = trim(text);
  if (text.empty() || text == "()") return Partition();
  if (text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    parts.push_back(parse_unsigned(trim(text.substr(pos, comma - pos)), "partition"));
    pos = comma + 1;
  }
  return from_unsorted(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

// MultVec --------------------------------------------------------------------

MultVec::MultVec(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [i, k] : entries) {
    if (i == 0) throw ArgumentError("multiplicity vector index must be >= 1");
    if (k == 0) continue;
    if (!entries_.empty() && entries_.back().first == i) {
      entries_.back().second += k;
    } else {
      entries_.emplace_back(i, k);
    }
  }
}

MultVec MultVec::parse(std::string_view text) {
  std::vector<Entry> entries;
  std::string buf(trim(text));
  if (buf == "{}" || buf == "0") return MultVec();
  std::istringstream in(buf);
  std::string token;
  while (in >> token) {
    auto caret = token.find('^');
    if (caret == std::string::npos) {
      entries.emplace_back(parse_unsigned(token, "multiplicity vector"), 1);
    } else {
      entries.emplace_back(parse_unsigned(std::string_view(token).substr(0, caret), "multiplicity vector"),
                           parse_unsigned(std::string_view(token).substr(caret + 1), "multiplicity vector"));
    }
  }
  return MultVec(std::move(entries));
}

unsigned MultVec::count(unsigned i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{i, 0});
  return (it != entries_.end() && it->first == i) ? it->second : 0;
}

void MultVec::add(unsigned i, unsigned k) {
  if (k == 0) return;
  if (i == 0) throw ArgumentError("multiplicity vector index must be >= 1");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{i, 0});
  if (it != entries_.end() && it->first == i) {
    it->second += k;
  } else {
    entries_.insert(it, Entry{i, k});
  }
}

unsigned MultVec::cardinality() const {
  unsigned s = 0;
  for (const auto& [i, k] : entries_) s += k;
  return s;
}

unsigned MultVec::weight() const {
  unsigned s = 0;
  for (const auto& [i, k] : entries_) s += i * k;
  return s;
}

std::string MultVec::to_string() const {
  std::string out;
  for (const auto& [i, k] : entries_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i) + '^' + std::to_string(k);
  }
  return out;
}

MultVec lambda_to_e(const Partition& lambda) {
  std::vector<MultVec::Entry> entries;
  for (unsigned p : lambda.parts()) entries.emplace_back(p, 1);
  return MultVec(std::move(entries));
}

Partition e_to_lambda(const MultVec& e) {
  std::vector<unsigned> parts;
  for (auto it = e.entries().rbegin(); it != e.entries().rend(); ++it) {
    parts.insert(parts.end(), it->second, it->first);
  }
  return Partition(std::move(parts));
}

Integer e_factorial(const MultVec& e) {
  Integer r = 1;
  for (const auto& [i, k] : e.entries()) r *= factorial(k);
  return r;
}

Partition conjugate(const Partition& lambda) {
  std::vector<unsigned> out;
  if (lambda.empty()) return Partition();
  const unsigned width = lambda.parts().front();
  for (unsigned c = 1; c <= width; ++c) {
    unsigned h = 0;
    for (unsigned p : lambda.parts()) h += (p >= c);
    out.push_back(h);
  }
  return Partition(std::move(out));
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  // Depth-first with the largest admissible part first yields decreasing
  // lexicographic order.
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::vector<unsigned>> compositions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned)> rec = [&](unsigned rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = 1; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<std::vector<unsigned>> weak_compositions(unsigned n, unsigned r) {
  std::vector<std::vector<unsigned>> out;
  if (r == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(r, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned idx, unsigned rest) {
    if (idx + 1 == r) {
      cur[idx] = rest;
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= rest; ++v) {
      cur[idx] = v;
      rec(idx + 1, rest - v);
    }
  };
  rec(0, n);
  return out;
}

// count_m --------------------------------------------------------------------

Integer count_m(const Partition& lambda, const std::vector<unsigned>& mu) {
  const unsigned total = std::accumulate(mu.begin(), mu.end(), 0u);
  if (total != lambda.size()) {
    throw ArgumentError("count_m: |mu| = " + std::to_string(total) + " but |lambda| = " +
                        std::to_string(lambda.size()));
  }
  const unsigned l = static_cast<unsigned>(lambda.length());
  for (unsigned c : mu) {
    if (c > l) return 0;
  }

  // Residual row sums are kept as a sorted multiset; rows with equal residual
  // are interchangeable, so a column is filled by choosing how many rows of
  // each residual value receive a 1.
  std::map<std::pair<std::size_t, std::vector<unsigned>>, Integer> memo;
  std::function<Integer(std::size_t, const std::vector<unsigned>&)> rec =
      [&](std::size_t col, const std::vector<unsigned>& residual) -> Integer {
    if (col == mu.size()) {
      return std::all_of(residual.begin(), residual.end(), [](unsigned r) { return r == 0; })
                 ? Integer(1)
                 : Integer(0);
    }
    auto key = std::make_pair(col, residual);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Rows still needing entries must fit into the remaining columns.
    const std::size_t cols_left = mu.size() - col;
    for (unsigned r : residual) {
      if (r > cols_left) return memo[key] = 0;
    }

    std::vector<std::pair<unsigned, unsigned>> groups;  // (residual value, multiplicity), value > 0
    for (unsigned r : residual) {
      if (r == 0) continue;
      if (!groups.empty() && groups.back().first == r) {
        ++groups.back().second;
      } else {
        groups.emplace_back(r, 1);
      }
    }

    Integer acc = 0;
    std::vector<unsigned> take(groups.size(), 0);
    std::function<void(std::size_t, unsigned, Integer)> choose = [&](std::size_t g, unsigned need,
                                                                    Integer ways) {
      if (g == groups.size()) {
        if (need != 0) return;
        std::vector<unsigned> next;
        for (unsigned r : residual) {
          if (r == 0) next.push_back(0);
        }
        for (std::size_t k = 0; k < groups.size(); ++k) {
          next.insert(next.end(), take[k], groups[k].first - 1);
          next.insert(next.end(), groups[k].second - take[k], groups[k].first);
        }
        std::sort(next.begin(), next.end(), std::greater<>());
        acc += ways * rec(col + 1, next);
        return;
      }
      const unsigned avail = groups[g].second;
      for (unsigned t = 0; t <= std::min(avail, need); ++t) {
        take[g] = t;
        choose(g + 1, need - t, ways * gen_binomial(static_cast<long>(avail), t));
      }
      take[g] = 0;
    };
    choose(0, mu[col], Integer(1));
    return memo[key] = acc;
  };

  std::vector<unsigned> start(lambda.parts().begin(), lambda.parts().end());
  return rec(0, start);
}

Integer count_m_exhaustive(const Partition& lambda, const std::vector<unsigned>& mu) {
  const unsigned total = std::accumulate(mu.begin(), mu.end(), 0u);
  if (total != lambda.size()) throw ArgumentError("count_m_exhaustive: size mismatch");
  const std::size_t l = lambda.length(), m = mu.size(), cells = l * m;
  if (cells > 24) throw RefusalError("count_m_exhaustive: l*m > 24");
  Integer count = 0;
  for (unsigned long mask = 0; mask < (1ul << cells); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < l && ok; ++i) {
      unsigned s = 0;
      for (std::size_t j = 0; j < m; ++j) s += (mask >> (i * m + j)) & 1u;
      ok = (s == lambda.parts()[i]);
    }
    for (std::size_t j = 0; j < m && ok; ++j) {
      unsigned s = 0;
      for (std::size_t i = 0; i < l; ++i) s += (mask >> (i * m + j)) & 1u;
      ok = (s == mu[j]);
    }
    if (ok) ++count;
  }
  return count;
}

// merge order ----------------------------------------------------------------

bool merge_closure_leq(const Partition& fine, const Partition& coarse) {
  if (fine.size() != coarse.size()) {
    throw ArgumentError("merge_closure_leq: partitions of different integers");
  }
  if (coarse.length() > fine.length()) return false;

  // Assign every part of `fine` to a part of `coarse` so that each coarse part
  // is exactly covered. Parts of `fine` are placed largest first.
  const auto& src = fine.parts();
  std::vector<unsigned> room(coarse.parts().begin(), coarse.parts().end());
  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == src.size()) {
      return std::all_of(room.begin(), room.end(), [](unsigned r) { return r == 0; });
    }
    for (std::size_t k = 0; k < room.size(); ++k) {
      if (room[k] < src[idx]) continue;
      // Equal remaining capacities are symmetric; try each value once.
      bool seen = false;
      for (std::size_t q = 0; q < k; ++q) seen |= (room[q] == room[k]);
      if (seen) continue;
      room[k] -= src[idx];
      if (place(idx + 1)) return true;
      room[k] += src[idx];
    }
    return false;
  };
  return place(0);
}

// Set partitions -------------------------------------------------------------

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::vector<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw ArgumentError("set partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw ArgumentError("set partition blocks must be disjoint");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::canonical(const Partition& lambda) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (unsigned p : lambda.parts()) {
    std::vector<int> b;
    for (unsigned k = 0; k < p; ++k) b.push_back(next++);
    blocks.push_back(std::move(b));
  }
  return SetPartition(std::move(blocks));
}

std::vector<int> SetPartition::ground() const {
  std::vector<int> g;
  for (const auto& b : blocks_) g.insert(g.end(), b.begin(), b.end());
  std::sort(g.begin(), g.end());
  return g;
}

MultVec SetPartition::type() const {
  std::vector<MultVec::Entry> entries;
  for (const auto& b : blocks_) entries.emplace_back(static_cast<unsigned>(b.size()), 1);
  return MultVec(std::move(entries));
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (std::size_t k = 0; k < blocks_[i].size(); ++k) {
      if (k) out += ',';
      out += std::to_string(blocks_[i][k]);
    }
    out += '}';
  }
  return out + "}";
}

Integer bell_number(unsigned n) {
  // Bell triangle.
  std::vector<Integer> row{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::vector<SetPartition> coarsenings(const SetPartition& a) {
  const auto& blocks = a.blocks();
  std::vector<SetPartition> out;
  for_each_set_partition(static_cast<unsigned>(blocks.size()),
                         [&](const std::vector<unsigned>& rgs, unsigned nblocks) {
                           std::vector<std::vector<int>> merged(nblocks);
                           for (std::size_t k = 0; k < blocks.size(); ++k) {
                             auto& dst = merged[rgs[k]];
                             dst.insert(dst.end(), blocks[k].begin(), blocks[k].end());
                           }
                           out.emplace_back(std::move(merged));
                         });
  std::sort(out.begin(), out.end(), [](const SetPartition& x, const SetPartition& y) {
    if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
    return x.blocks() < y.blocks();
  });
  return out;
}

}  // namespace symcc
