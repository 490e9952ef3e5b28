#include "cactus/cacti.hpp"

#include <algorithm>

#include "cactus/error.hpp"
#include "cactus/operad.hpp"

namespace cactus {

namespace {

std::vector<std::vector<std::size_t>> occurrences(const Surjection& u) {
  std::vector<std::vector<std::size_t>> occ(static_cast<std::size_t>(u.arity()) + 1);
  for (std::size_t pos = 1; pos <= u.length(); ++pos) {
    occ[static_cast<std::size_t>(u(pos))].push_back(pos);
  }
  return occ;
}

void throwNotACactus(const Surjection& u) {
  std::string message = u.toString() + " is not a cactus";
  if (auto w = findCrossing(u)) {
    message += "; (i,j,i,j) at positions " + std::to_string((*w)[0]) + "," +
               std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + "," +
               std::to_string((*w)[3]) + " = (" + std::to_string(u((*w)[0])) + "," +
               std::to_string(u((*w)[1])) + "," + std::to_string(u((*w)[2])) + "," +
               std::to_string(u((*w)[3])) + ")";
  }
  throw Error(ErrorKind::NotACactus, message);
}

class LobeParser {
 public:
  explicit LobeParser(const Surjection& u) : u_(u), occ_(occurrences(u)) {}

  std::vector<LobeNode> forest(std::size_t lo, std::size_t hi) const {
    std::vector<LobeNode> nodes;
    std::size_t p = lo;
    while (p < hi) {
      const auto& arcs = occ_[static_cast<std::size_t>(u_(p))];
      if (arcs.front() != p || arcs.back() >= hi) throwNotACactus(u_);
      LobeNode node;
      node.label = u_(p);
      node.arcs = arcs;
      for (std::size_t g = 0; g + 1 < arcs.size(); ++g) {
        node.attachments.push_back(forest(arcs[g] + 1, arcs[g + 1]));
      }
      nodes.push_back(std::move(node));
      p = arcs.back() + 1;
    }
    return nodes;
  }

 private:
  const Surjection& u_;
  std::vector<std::vector<std::size_t>> occ_;
};

void flattenInto(const LobeNode& node, std::vector<int>& out) {
  out.push_back(node.label);
  for (const auto& gap : node.attachments) {
    for (const auto& child : gap) flattenInto(child, out);
    out.push_back(node.label);
  }
}

std::size_t countLobes(const LobeNode& node) {
  std::size_t total = 1;
  for (const auto& gap : node.attachments) {
    for (const auto& child : gap) total += countLobes(child);
  }
  return total;
}

void collectEdges(const LobeNode& node, std::vector<std::pair<int, int>>& out) {
  for (const auto& gap : node.attachments) {
    for (const auto& child : gap) {
      out.emplace_back(node.label, child.label);
      collectEdges(child, out);
    }
  }
}

class BasisEnumerator {
 public:
  BasisEnumerator(int n, int k, int level)
      : n_(n),
        length_(static_cast<std::size_t>(n + k)),
        maxRuns_(level == kUnboundedLevel ? kUnboundedLevel : level + 1),
        count_(static_cast<std::size_t>(n) + 1, 0),
        lastPos_(static_cast<std::size_t>(n) + 1, 0),
        runs_(static_cast<std::size_t>((n + 1) * (n + 1)), 0) {}

  std::vector<Surjection> run() {
    seq_.reserve(length_);
    extend();
    return std::move(out_);
  }

 private:
  int& runs(int a, int b) {
    if (a > b) std::swap(a, b);
    return runs_[static_cast<std::size_t>(a * (n_ + 1) + b)];
  }

  void extend() {
    const std::size_t pos = seq_.size();
    if (pos == length_) {
      if (missing_ == 0) out_.push_back(Surjection::validate(seq_));
      return;
    }
    if (missing_ > static_cast<int>(length_ - pos)) return;
    const int previous = seq_.empty() ? 0 : seq_.back();
    std::vector<int> bumped;
    for (int v = 1; v <= n_; ++v) {
      if (v == previous) continue;
      bumped.clear();
      bool ok = true;
      for (int y = 1; y <= n_; ++y) {
        if (y == v) continue;
        const auto ly = lastPos_[static_cast<std::size_t>(y)];
        const auto lv = lastPos_[static_cast<std::size_t>(v)];
        if (ly > lv || (ly == 0 && lv == 0)) {
          bumped.push_back(y);
          if (++runs(v, y) > maxRuns_) ok = false;
        }
      }
      const auto savedLast = lastPos_[static_cast<std::size_t>(v)];
      if (ok) {
        if (count_[static_cast<std::size_t>(v)]++ == 0) --missing_;
        lastPos_[static_cast<std::size_t>(v)] = pos + 1;
        seq_.push_back(v);
        extend();
        seq_.pop_back();
        lastPos_[static_cast<std::size_t>(v)] = savedLast;
        if (--count_[static_cast<std::size_t>(v)] == 0) ++missing_;
      }
      for (int y : bumped) --runs(v, y);
    }
  }

  int n_;
  std::size_t length_;
  int maxRuns_;
  int missing_ = n_;
  std::vector<int> count_;
  std::vector<std::size_t> lastPos_;
  std::vector<int> runs_;
  std::vector<int> seq_;
  std::vector<Surjection> out_;
};

}  // namespace

int filtrationLevel(const Surjection& u) {
  const auto& s = u.values();
  int longest = 1;
  for (int a = 1; a <= u.arity(); ++a) {
    for (int b = a + 1; b <= u.arity(); ++b) {
      int runs = 0;
      int last = 0;
      for (int x : s) {
        if ((x == a || x == b) && x != last) {
          ++runs;
          last = x;
        }
      }
      longest = std::max(longest, runs);
    }
  }
  return std::max(1, longest - 1);
}

std::optional<std::array<std::size_t, 4>> findCrossing(const Surjection& u) {
  const auto occ = occurrences(u);
  std::vector<int> open;  // lobes seen and not yet closed
  for (std::size_t pos = 1; pos <= u.length(); ++pos) {
    const int x = u(pos);
    const auto& arcs = occ[static_cast<std::size_t>(x)];
    if (arcs.front() == pos) {
      if (arcs.size() > 1) open.push_back(x);
      continue;
    }
    if (open.back() != x) {
      const int y = open.back();
      const auto& yArcs = occ[static_cast<std::size_t>(y)];
      const auto next = *std::upper_bound(yArcs.begin(), yArcs.end(), pos);
      return std::array<std::size_t, 4>{arcs.front(), yArcs.front(), pos, next};
    }
    if (arcs.back() == pos) open.pop_back();
  }
  return std::nullopt;
}

bool isCactus(const Surjection& u) { return !findCrossing(u).has_value(); }

std::size_t LobeTree::lobeCount() const {
  std::size_t total = 0;
  for (const auto& r : roots) total += countLobes(r);
  return total;
}

LobeTree lobeTree(const Surjection& u) {
  const LobeParser parser(u);
  return LobeTree{parser.forest(1, u.length() + 1)};
}

Surjection flatten(const LobeTree& tree) {
  std::vector<int> seq;
  for (const auto& r : tree.roots) flattenInto(r, seq);
  return Surjection::validate(seq);
}

std::vector<std::pair<int, int>> attachmentEdges(const LobeTree& tree) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& r : tree.roots) collectEdges(r, edges);
  return edges;
}

std::vector<Surjection> enumerateBasis(int n, int k, int level, std::size_t maxLength) {
  if (n < 1 || k < 0 || level < 1) {
    throw Error(ErrorKind::InvalidArgument, "enumerateBasis(n=" + std::to_string(n) +
                                                ", k=" + std::to_string(k) +
                                                ", level=" + std::to_string(level) + ")");
  }
  if (static_cast<std::size_t>(n + k) > maxLength) {
    throw Error(ErrorKind::ResourceBound, "sequence length " + std::to_string(n + k) +
                                              " exceeds cap " + std::to_string(maxLength));
  }
  return BasisEnumerator(n, k, level).run();
}

bool hasForbiddenTriple(const Surjection& u) {
  const auto occ = occurrences(u);
  for (int i = 1; i <= u.arity(); ++i) {
    const auto& arcs = occ[static_cast<std::size_t>(i)];
    if (arcs.size() < 2) continue;
    for (std::size_t pos = arcs.front() + 1; pos < arcs.back(); ++pos) {
      const int j = u(pos);
      if (j == i + 1 || j < i) return true;
    }
  }
  return false;
}

std::vector<CPrimeEntry> cprimeFamily(int n, std::size_t maxLength) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "C'_n needs n >= 2");
  if (static_cast<std::size_t>(2 * n - 2) > maxLength) {
    throw Error(ErrorKind::ResourceBound, "C'_" + std::to_string(n) + " has length " +
                                              std::to_string(2 * n - 2) + " beyond cap " +
                                              std::to_string(maxLength));
  }
  std::vector<CPrimeEntry> layer{{Surjection::validate({1, 2}), std::nullopt, 0},
                                 {Surjection::validate({2, 1}), std::nullopt, 0}};
  for (int m = 2; m < n; ++m) {
    std::vector<CPrimeEntry> next;
    for (const auto& entry : layer) {
      const auto& u = entry.cactus;
      for (std::size_t j = 1; j <= u.length(); ++j) {
        if (u(j) == m) continue;
        next.push_back({insertLobe(u, j), u, j});
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end(),
            [](const CPrimeEntry& a, const CPrimeEntry& b) { return a.cactus < b.cactus; });
  return layer;
}

std::vector<Surjection> generateCPrime(int n, std::size_t maxLength) {
  std::vector<Surjection> out;
  for (auto& entry : cprimeFamily(n, maxLength)) out.push_back(std::move(entry.cactus));
  return out;
}

std::vector<Surjection> filterCPrime(int n, std::size_t maxLength) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "C'_n needs n >= 2");
  std::vector<Surjection> out;
  for (auto& u : enumerateBasis(n, n - 2, 2, maxLength)) {
    if (!hasForbiddenTriple(u)) out.push_back(std::move(u));
  }
  return out;
}

long long cprimeCount(int n) {
  if (n < 2) return 0;
  long long count = 2;
  for (int f = 2 * n - 5; f > 1; f -= 2) count *= f;
  return count;
}

}  // namespace cactus
