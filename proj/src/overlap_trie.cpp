#include "hog/overlap_trie.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace hog {

std::string_view kind_name(TrieKind kind) {
  switch (kind) {
    case TrieKind::Act: return "ACT";
    case TrieKind::Ehog: return "EHOG";
    case TrieKind::Hog: return "HOG";
  }
  return "?";
}

NodeId OverlapTrie::child(NodeId v, unsigned char byte) const {
  auto kids = children(v);
  auto it = std::lower_bound(kids.begin(), kids.end(), byte,
                             [&](NodeId c, unsigned char b) { return first_byte(c) < b; });
  if (it != kids.end() && first_byte(*it) == byte) return *it;
  return kNoNode;
}

std::size_t MarkVector::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

MarkVector base_marks(const OverlapTrie& t) {
  MarkVector m(t.node_count());
  m.set(kRoot);
  for (NodeId v : t.leaf_of) m.set(v);
  return m;
}

namespace {

void build_children(OverlapTrie& t) {
  const std::size_t n = t.node_count();
  t.child_begin.assign(n + 1, 0);
  for (NodeId v = 1; v < n; ++v) ++t.child_begin[t.parent[v] + 1];
  for (std::size_t v = 0; v < n; ++v) t.child_begin[v + 1] += t.child_begin[v];
  t.child_ids.assign(n == 0 ? 0 : n - 1, kNoNode);
  std::vector<std::uint32_t> fill(t.child_begin.begin(), t.child_begin.end() - 1);
  // Increasing ids within a parent are ascending strings in preorder.
  for (NodeId v = 1; v < n; ++v) t.child_ids[fill[t.parent[v]]++] = v;
}

}  // namespace

void compute_leaf_intervals(OverlapTrie& t) {
  const std::size_t n = t.node_count();
  t.start.assign(n, kNoString);
  t.end.assign(n, 0);
  for (NodeId v = 0; v < n; ++v)
    if (t.string_of[v] != kNoString) t.start[v] = t.end[v] = t.string_of[v];
  for (NodeId v = static_cast<NodeId>(n); v-- > 1;) {
    NodeId p = t.parent[v];
    t.start[p] = std::min(t.start[p], t.start[v]);
    t.end[p] = std::max(t.end[p], t.end[v]);
  }
}

OverlapTrie build_act(const StringSet& p) {
  OverlapTrie t;
  t.kind = TrieKind::Act;
  t.text = p.text();
  const std::size_t cap = static_cast<std::size_t>(p.total_length()) + 1;
  t.parent.reserve(cap);
  t.depth.reserve(cap);
  t.label.reserve(cap);
  t.string_of.reserve(cap);

  t.parent.push_back(kNoNode);
  t.depth.push_back(0);
  t.label.push_back({});
  t.string_of.push_back(kNoString);
  t.leaf_of.resize(p.size());

  // Inserting in sorted order: each string shares its longest common prefix
  // with its predecessor and adds the rest as a new rightmost branch, so ids
  // come out in preorder.
  std::vector<NodeId> path{kRoot};
  std::string_view prev;
  for (StringIndex i = 0; i < p.size(); ++i) {
    std::string_view s = p[i];
    std::size_t lcp = 0;
    const std::size_t limit = std::min(prev.size(), s.size());
    while (lcp < limit && prev[lcp] == s[lcp]) ++lcp;
    path.resize(lcp + 1);
    for (std::size_t d = lcp + 1; d <= s.size(); ++d) {
      NodeId id = static_cast<NodeId>(t.parent.size());
      t.parent.push_back(path[d - 1]);
      t.depth.push_back(static_cast<std::uint32_t>(d));
      t.label.push_back({p.offset(i) + d - 1, 1});
      t.string_of.push_back(kNoString);
      path.push_back(id);
    }
    t.string_of[path.back()] = i;
    t.leaf_of[i] = path.back();
    prev = s;
  }
  build_children(t);

  // Classic breadth-first suffix links.
  const std::size_t n = t.node_count();
  t.suffix_link.assign(n, kRoot);
  std::vector<NodeId> queue;
  queue.reserve(n);
  queue.push_back(kRoot);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId v = queue[head];
    for (NodeId c : t.children(v)) {
      queue.push_back(c);
      if (v == kRoot) continue;
      const unsigned char b = t.first_byte(c);
      NodeId w = t.suffix_link[v];
      for (;;) {
        NodeId next = t.child(w, b);
        if (next != kNoNode) {
          t.suffix_link[c] = next;
          break;
        }
        if (w == kRoot) break;
        w = t.suffix_link[w];
      }
    }
  }
  compute_leaf_intervals(t);
  return t;
}

OverlapTrie contract(const OverlapTrie& t, const MarkVector& marks, TrieKind new_kind) {
  const std::size_t n = t.node_count();
  if (marks.size() != n) throw Error("mark vector size does not match the trie");
  if (!marks[kRoot]) throw Error("malformed mark vector: root is not marked");
  for (NodeId v : t.leaf_of)
    if (!marks[v]) throw Error("malformed mark vector: node of a string in P is not marked");

  std::vector<NodeId> new_id(n, kNoNode);
  NodeId m = 0;
  for (NodeId v = 0; v < n; ++v)
    if (marks[v]) new_id[v] = m++;

  // Nearest marked ancestor-or-self; parents precede children in preorder.
  std::vector<NodeId> nearest(n);
  for (NodeId v = 0; v < n; ++v) nearest[v] = marks[v] ? v : nearest[t.parent[v]];

  OverlapTrie out;
  out.kind = new_kind;
  out.text = t.text;
  out.parent.resize(m);
  out.depth.resize(m);
  out.label.resize(m);
  out.suffix_link.resize(m);
  out.string_of.resize(m);
  out.start.resize(m);
  out.end.resize(m);
  out.leaf_of.resize(t.string_count());

  // First marked node on the suffix chain starting at a node, memoized.
  std::vector<NodeId> first_marked(n, kNoNode);
  for (NodeId v = 0; v < n; ++v)
    if (marks[v]) first_marked[v] = v;
  std::vector<NodeId> chain;
  auto resolve = [&](NodeId w) {
    chain.clear();
    while (first_marked[w] == kNoNode) {
      chain.push_back(w);
      w = t.suffix_link[w];
    }
    const NodeId r = first_marked[w];
    for (NodeId x : chain) first_marked[x] = r;
    return r;
  };

  for (NodeId v = 0; v < n; ++v) {
    if (!marks[v]) continue;
    const NodeId nv = new_id[v];
    out.depth[nv] = t.depth[v];
    out.string_of[nv] = t.string_of[v];
    out.start[nv] = t.start[v];
    out.end[nv] = t.end[v];
    if (v == kRoot) {
      out.parent[nv] = kNoNode;
      out.label[nv] = {};
      out.suffix_link[nv] = kRoot;
      continue;
    }
    const NodeId np = nearest[t.parent[v]];
    out.parent[nv] = new_id[np];
    const std::uint32_t len = t.depth[v] - t.depth[np];
    out.label[nv] = {t.label[v].end() - len, len};
    out.suffix_link[nv] = new_id[resolve(t.suffix_link[v])];
  }
  for (StringIndex i = 0; i < t.string_count(); ++i) out.leaf_of[i] = new_id[t.leaf_of[i]];
  build_children(out);
  return out;
}

std::vector<std::string> node_strings(const OverlapTrie& t) {
  std::vector<std::string> out;
  out.reserve(t.node_count());
  for (NodeId v = 0; v < t.node_count(); ++v) out.emplace_back(t.spell(v));
  return out;
}

namespace {

// Polynomial hash over the text so any node's string or suffix hashes in O(1).
class WindowHash {
 public:
  explicit WindowHash(std::string_view text) : prefix_(text.size() + 1, 0), power_(text.size() + 1, 1) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      prefix_[i + 1] = prefix_[i] * kBase + static_cast<unsigned char>(text[i]) + 1;
      power_[i + 1] = power_[i] * kBase;
    }
  }
  std::uint64_t operator()(std::uint64_t begin, std::uint64_t end) const {
    return prefix_[end] - prefix_[begin] * power_[end - begin];
  }

 private:
  static constexpr std::uint64_t kBase = 0x100000001b3ULL;
  std::vector<std::uint64_t> prefix_, power_;
};

}  // namespace

std::vector<std::string> verify_structure(const OverlapTrie& t) {
  std::vector<std::string> errors;
  auto fail = [&](std::string msg) { errors.push_back(std::move(msg)); };
  const std::size_t n = t.node_count();
  auto node = [](NodeId v) { return "node " + std::to_string(v); };

  if (n == 0) {
    fail("no nodes");
    return errors;
  }
  if (!t.text) {
    fail("no text buffer");
    return errors;
  }
  if (t.depth.size() != n || t.label.size() != n || t.suffix_link.size() != n || t.string_of.size() != n ||
      t.start.size() != n || t.end.size() != n || t.child_begin.size() != n + 1) {
    fail("per-node arrays have inconsistent sizes");
    return errors;
  }
  const std::string_view text(*t.text);
  for (NodeId v = 0; v < n; ++v) {
    if (t.label[v].end() > text.size() || t.label[v].end() < t.depth[v]) {
      fail(node(v) + ": label outside the text buffer");
      return errors;
    }
    if (v != kRoot && (t.parent[v] >= v || t.suffix_link[v] >= n)) {
      fail(node(v) + ": parent or suffix link out of range");
      return errors;
    }
  }

  if (t.parent[kRoot] != kNoNode || t.depth[kRoot] != 0 || t.suffix_link[kRoot] != kRoot)
    fail("root must have no parent, depth 0 and a suffix link to itself");

  for (NodeId v = 1; v < n; ++v) {
    const NodeId p = t.parent[v];
    if (t.label[v].length == 0) fail(node(v) + ": empty edge label");
    if (t.depth[v] != t.depth[p] + t.label[v].length) fail(node(v) + ": depth != parent depth + label length");
    const std::string_view s = t.spell(v);
    if (s.substr(0, t.depth[p]) != t.spell(p)) fail(node(v) + ": parent string is not a prefix");
    if (s.substr(std::min<std::size_t>(t.depth[p], s.size())) != t.edge_text(v))
      fail(node(v) + ": edge label does not spell the path");
    const NodeId l = t.suffix_link[v];
    if (t.depth[l] >= t.depth[v]) fail(node(v) + ": suffix link does not decrease depth");
    else if (s.substr(s.size() - t.depth[l]) != t.spell(l)) fail(node(v) + ": suffix link is not a suffix");
    if (t.kind == TrieKind::Act && t.label[v].length != 1) fail(node(v) + ": ACT edge label longer than one byte");
  }

  // Children: CSR consistent with parent, byte-sorted, preorder layout.
  std::vector<std::uint32_t> subtree(n, 1);
  for (NodeId v = static_cast<NodeId>(n); v-- > 1;) subtree[t.parent[v]] += subtree[v];
  if (t.child_ids.size() != n - 1) fail("child list size != node count - 1");
  else
    for (NodeId v = 0; v < n; ++v) {
      NodeId expect = v + 1;
      NodeId prev = kNoNode;
      for (NodeId c : t.children(v)) {
        if (c >= n || t.parent[c] != v) {
          fail(node(v) + ": child list disagrees with parent array");
          break;
        }
        // Siblings of a contracted structure may share a first byte.
        if (prev != kNoNode && (t.kind == TrieKind::Act ? t.first_byte(c) <= t.first_byte(prev) : t.spell(c) <= t.spell(prev)))
          fail(node(v) + ": children not in ascending order");
        prev = c;
        if (c != expect) fail(node(v) + ": ids are not in preorder");
        expect = c + subtree[c];
      }
    }

  // Strings of P.
  const std::size_t k = t.string_count();
  if (k == 0) fail("no strings");
  std::vector<std::uint8_t> seen(k, 0);
  for (NodeId v = 0; v < n; ++v) {
    const StringIndex i = t.string_of[v];
    if (i == kNoString) {
      if (t.is_leaf(v) && v != kRoot) fail(node(v) + ": leaf that is not a string of P");
      continue;
    }
    if (i >= k || t.leaf_of[i] != v) fail(node(v) + ": string_of and leaf_of disagree");
    else seen[i] = 1;
  }
  for (StringIndex i = 0; i < k; ++i) {
    if (!seen[i]) fail("string " + std::to_string(i) + " has no node");
    if (i > 0 && seen[i] && seen[i - 1] && !(t.spell(t.leaf_of[i - 1]) < t.spell(t.leaf_of[i])))
      fail("strings " + std::to_string(i - 1) + "," + std::to_string(i) + " are not in ascending order");
  }
  if (t.kind == TrieKind::Act && n > text.size() + 1) fail("ACT has more than n+1 nodes");

  // Leaf intervals: recompute, then check nesting parent/child and siblings.
  std::vector<StringIndex> lo(n, kNoString), hi(n, 0);
  for (NodeId v = 0; v < n; ++v)
    if (t.string_of[v] != kNoString && t.string_of[v] < k) lo[v] = hi[v] = t.string_of[v];
  for (NodeId v = static_cast<NodeId>(n); v-- > 1;) {
    lo[t.parent[v]] = std::min(lo[t.parent[v]], lo[v]);
    hi[t.parent[v]] = std::max(hi[t.parent[v]], hi[v]);
  }
  for (NodeId v = 0; v < n; ++v) {
    if (t.start[v] != lo[v] || t.end[v] != hi[v]) fail(node(v) + ": leaf interval is wrong");
    StringIndex last = kNoString;
    for (NodeId c : t.children(v)) {
      if (t.start[c] < t.start[v] || t.end[c] > t.end[v]) fail(node(c) + ": interval not nested in its parent's");
      if (last != kNoString && t.start[c] <= last) fail(node(c) + ": interval overlaps a sibling's");
      last = t.end[c];
    }
  }
  // Explicit membership check when the instance is small.
  if (n * k <= 4'000'000 && errors.empty())
    for (NodeId v = 0; v < n; ++v)
      for (StringIndex j = 0; j < k; ++j) {
        const bool prefix = t.spell(t.leaf_of[j]).starts_with(t.spell(v));
        const bool inside = t.start[v] <= j && j <= t.end[v];
        if (prefix != inside) {
          fail(node(v) + ": interval membership of string " + std::to_string(j) + " is wrong");
          break;
        }
      }

  // Node strings distinct, and each suffix link is the longest proper suffix
  // present: no suffix strictly between link and node is a node.
  WindowHash hash(text);
  std::unordered_multimap<std::uint64_t, NodeId> by_hash;
  by_hash.reserve(n);
  auto key = [&](std::uint64_t begin, std::uint64_t end) { return hash(begin, end) ^ ((end - begin) * 0x9e3779b97f4a7c15ULL); };
  auto find_node = [&](std::uint64_t begin, std::uint64_t end) -> NodeId {
    auto [lo_it, hi_it] = by_hash.equal_range(key(begin, end));
    for (auto it = lo_it; it != hi_it; ++it)
      if (t.spell(it->second) == text.substr(begin, end - begin)) return it->second;
    return kNoNode;
  };
  for (NodeId v = 0; v < n; ++v) {
    const std::uint64_t e = t.label[v].end();
    if (NodeId dup = find_node(e - t.depth[v], e); dup != kNoNode) fail(node(v) + ": duplicates the string of " + node(dup));
    by_hash.emplace(key(e - t.depth[v], e), v);
  }
  for (NodeId v = 1; v < n; ++v) {
    const std::uint64_t e = t.label[v].end();
    const std::uint64_t b = e - t.depth[v];
    for (std::uint32_t len = t.depth[t.parent[v]] + 1; len < t.depth[v]; ++len)
      if (find_node(b, b + len) != kNoNode) {
        fail(node(v) + ": parent is not the longest proper prefix that is a node");
        break;
      }
    for (std::uint32_t len = t.depth[v] - 1; len > t.depth[t.suffix_link[v]]; --len)
      if (find_node(e - len, e) != kNoNode) {
        fail(node(v) + ": suffix link skips a longer suffix that is a node");
        break;
      }
  }
  return errors;
}

namespace {

void write_escaped(std::ostream& out, std::string_view s) {
  for (unsigned char c : s) {
    switch (c) {
      case '\\': out << "\\\\"; break;
      case ' ': out << "\\s"; break;
      case '\n': out << "\\n"; break;
      case '\r': out << "\\r"; break;
      case '\t': out << "\\t"; break;
      default:
        if (c < 0x21 || c > 0x7e) {
          char buf[5];
          std::snprintf(buf, sizeof buf, "\\x%02X", c);
          out << buf;
        } else {
          out << static_cast<char>(c);
        }
    }
  }
}

template <typename T>
void write_index(std::ostream& out, T value, T none) {
  if (value == none) out << '-';
  else out << value;
}

}  // namespace

void serialize(const OverlapTrie& t, std::ostream& out) {
  out << "# " << kind_name(t.kind) << " nodes=" << t.node_count() << " strings=" << t.string_count() << '\n';
  for (NodeId v = 0; v < t.node_count(); ++v) {
    out << v << ' ';
    write_index(out, t.parent[v], kNoNode);
    out << ' ' << t.depth[v] << ' ';
    if (v == kRoot) out << '-';
    else write_escaped(out, t.edge_text(v));
    out << ' ' << t.suffix_link[v] << ' ' << t.start[v] << ' ' << t.end[v] << ' ';
    write_index(out, t.string_of[v], kNoString);
    out << '\n';
  }
}

}  // namespace hog
