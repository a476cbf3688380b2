#include "tubes/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tubes/error.hpp"

namespace tubes {

namespace {

std::int64_t length_of(const ArcAnn& x) { return x.len(); }
std::int64_t length_of(const ArcU& x) { return x.length(); }

std::string label(const ArcAnn& x) { return x.str(); }
std::string label(const ArcU& x) { return x.str(); }

template <typename Arc>
bool by_len_then_start(const Arc& x, const Arc& y) {
  if (length_of(x) != length_of(y)) return length_of(x) < length_of(y);
  return x.a() < y.a();
}

template <typename Arc>
void add_arrow(TranslationQuiver<Arc>& q, const Arc& from, const Arc& to) {
  if (!q.arrows.emplace(from, to).second) {
    throw std::logic_error("multiple arrows " + label(from) + " -> " + label(to));
  }
}

template <typename Arc>
std::optional<Arc> mesh_violation_impl(const TranslationQuiver<Arc>& q) {
  for (const Arc& x : q.vertices) {
    if (!q.is_interior(x)) continue;
    std::vector<Arc> expected;
    for (const Arc& y : q.successors(x)) {
      auto ty = q.translate(y);
      if (!ty) return x;
      expected.push_back(*ty);
    }
    std::vector<Arc> actual = q.predecessors(x);
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) return x;
  }
  return std::nullopt;
}

template <typename Arc>
std::string to_dot_impl(const TranslationQuiver<Arc>& q, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const Arc& x : q.vertices) os << "  \"" << label(x) << "\";\n";
  for (const Arc& x : q.vertices) {
    for (const Arc& y : q.successors(x)) os << "  \"" << label(x) << "\" -> \"" << label(y) << "\";\n";
  }
  for (const Arc& x : q.vertices) {
    if (auto tx = q.translate(x)) {
      os << "  \"" << label(x) << "\" -> \"" << label(*tx) << "\" [style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

template <typename Arc>
bool TranslationQuiver<Arc>::contains(const Arc& x) const {
  return std::binary_search(vertices.begin(), vertices.end(), x, by_len_then_start<Arc>);
}

template <typename Arc>
std::vector<Arc> TranslationQuiver<Arc>::successors(const Arc& x) const {
  std::vector<Arc> out;
  for (const auto& [s, t] : arrows) {
    if (s == x) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), by_len_then_start<Arc>);
  return out;
}

template <typename Arc>
std::vector<Arc> TranslationQuiver<Arc>::predecessors(const Arc& x) const {
  std::vector<Arc> out;
  for (const auto& [s, t] : arrows) {
    if (t == x) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), by_len_then_start<Arc>);
  return out;
}

template <typename Arc>
std::optional<Arc> TranslationQuiver<Arc>::translate(const Arc& x) const {
  auto it = tau.find(x);
  if (it == tau.end()) return std::nullopt;
  return it->second;
}

template <typename Arc>
bool TranslationQuiver<Arc>::is_interior(const Arc& x) const {
  if (length_of(x) + 1 > max_len || !tau.contains(x)) return false;
  return std::any_of(tau.begin(), tau.end(), [&](const auto& kv) { return kv.second == x; });
}

template struct TranslationQuiver<ArcAnn>;
template struct TranslationQuiver<ArcU>;

TubeQuiver generate_window(std::int64_t n, std::int64_t max_len) {
  if (n < 1) throw TubeError(ErrorKind::InvalidArgument, "rank must be positive, got " + std::to_string(n));
  if (max_len < 2) throw TubeError(ErrorKind::InvalidArgument, "max_len must be at least 2, got " + std::to_string(max_len));
  TubeQuiver q;
  q.max_len = max_len;
  for (std::int64_t len = 2; len <= max_len; ++len) {
    for (std::int64_t a = 0; a < n; ++a) q.vertices.emplace_back(n, a, len);
  }
  for (const ArcAnn& x : q.vertices) {
    const ArcU lift = canonical_lift(x);
    // [a,b] -> [a,b+1] and [a,b] -> [a+1,b]
    if (x.len() + 1 <= max_len) add_arrow(q, x, project(ArcU(lift.a(), lift.b() + 1), n));
    if (x.len() - 1 >= 2) add_arrow(q, x, project(ArcU(lift.a() + 1, lift.b()), n));
    q.tau.emplace(x, tau_arc(x));
  }
  return q;
}

LineQuiver generate_infinity_window(std::int64_t a_min, std::int64_t a_max, std::int64_t max_len) {
  if (a_min > a_max) throw TubeError(ErrorKind::InvalidArgument, "empty window: a_min > a_max");
  if (max_len < 2) throw TubeError(ErrorKind::InvalidArgument, "max_len must be at least 2, got " + std::to_string(max_len));
  LineQuiver q;
  q.max_len = max_len;
  for (std::int64_t len = 2; len <= max_len; ++len) {
    for (std::int64_t a = a_min; a <= a_max; ++a) q.vertices.emplace_back(a, a + len);
  }
  for (const ArcU& x : q.vertices) {
    const ArcU up(x.a(), x.b() + 1);
    if (q.contains(up)) add_arrow(q, x, up);
    if (x.length() >= 3) {
      const ArcU right(x.a() + 1, x.b());
      if (q.contains(right)) add_arrow(q, x, right);
    }
    const ArcU tx(x.a() - 1, x.b() - 1);
    if (q.contains(tx)) q.tau.emplace(x, tx);
  }
  return q;
}

std::optional<ArcAnn> mesh_violation(const TubeQuiver& q) { return mesh_violation_impl(q); }
std::optional<ArcU> mesh_violation(const LineQuiver& q) { return mesh_violation_impl(q); }

std::string to_dot(const TubeQuiver& q) { return to_dot_impl(q, "tube"); }
std::string to_dot(const LineQuiver& q) { return to_dot_impl(q, "za_infinity"); }

}  // namespace tubes
