#include "mapcount/map_oracle.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "mapcount/errors.hpp"

namespace mapcount {

namespace {

constexpr int kMaxEdges = 7;

int count_cycles(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t d = 0; d < perm.size(); ++d) {
    if (seen[d]) continue;
    ++cycles;
    for (auto x = static_cast<int>(d); !seen[static_cast<std::size_t>(x)]; x = perm[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
  return cycles;
}

/// Generates every rotation whose canonical relabelling from dart 0 is the
/// identity. Darts are processed in label order; the image of the current dart
/// is either an already-labelled dart that is not yet an image, or the next
/// unused edge pair.
class Generator {
 public:
  explicit Generator(int n) : n_(n), sigma_(static_cast<std::size_t>(2 * n), -1),
                              in_image_(static_cast<std::size_t>(2 * n), 0) {}

  void run(const std::function<void(const std::vector<int>&)>& emit) {
    emit_ = &emit;
    labelled_ = 2;
    step(0);
  }

 private:
  void step(int d) {
    if (d == 2 * n_) {
      (*emit_)(sigma_);
      return;
    }
    if (d >= labelled_) return;
    const auto du = static_cast<std::size_t>(d);
    for (int t = 0; t < labelled_; ++t) {
      const auto tu = static_cast<std::size_t>(t);
      if (in_image_[tu]) continue;
      sigma_[du] = t;
      in_image_[tu] = 1;
      step(d + 1);
      in_image_[tu] = 0;
    }
    if (labelled_ < 2 * n_) {
      const int t = labelled_;
      sigma_[du] = t;
      in_image_[static_cast<std::size_t>(t)] = 1;
      labelled_ += 2;
      step(d + 1);
      labelled_ -= 2;
      in_image_[static_cast<std::size_t>(t)] = 0;
    }
    sigma_[du] = -1;
  }

  int n_;
  int labelled_ = 0;
  std::vector<int> sigma_;
  std::vector<char> in_image_;
  const std::function<void(const std::vector<int>&)>* emit_ = nullptr;
};

bool connected_without(const Multigraph& g, std::uint32_t removed) {
  int start = -1;
  int alive = 0;
  for (int v = 0; v < g.vertices; ++v) {
    if (!(removed >> v & 1U)) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.vertices), 0);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : g.edges) {
      int w = -1;
      if (a == v) w = b;
      else if (b == v) w = a;
      if (w < 0 || (removed >> w & 1U) || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == alive;
}

template <class Value, class Base>
Value deletion_contraction(const Multigraph& g, const Value& nu_minus_one, const Value& nu, Base&& base) {
  if (g.edges.empty()) return base(g.vertices);
  const std::size_t e = g.edges.size() - 1;
  if (g.is_loop(e)) return nu * deletion_contraction(g.without_edge(e), nu_minus_one, nu, base);
  return deletion_contraction(g.without_edge(e), nu_minus_one, nu, base) +
         nu_minus_one * deletion_contraction(g.contracted(e), nu_minus_one, nu, base);
}

PolyNu nu_power(std::size_t k) { return PolyNu::monomial(BigRational(1), k); }

}  // namespace

int CombMap::vertex_count() const { return edges == 0 ? 1 : count_cycles(sigma); }

int CombMap::face_count() const {
  if (edges == 0) return 1;
  std::vector<int> phi(sigma.size());
  for (std::size_t d = 0; d < sigma.size(); ++d) phi[d] = sigma[static_cast<std::size_t>(alpha(static_cast<int>(d)))];
  return count_cycles(phi);
}

std::vector<int> CombMap::dart_vertices() const {
  std::vector<int> vertex(sigma.size(), -1);
  int next = 0;
  for (std::size_t d = 0; d < sigma.size(); ++d) {
    if (vertex[d] >= 0) continue;
    for (auto x = static_cast<int>(d); vertex[static_cast<std::size_t>(x)] < 0; x = sigma[static_cast<std::size_t>(x)]) {
      vertex[static_cast<std::size_t>(x)] = next;
    }
    ++next;
  }
  return vertex;
}

Multigraph Multigraph::of(const CombMap& m) {
  Multigraph g;
  if (m.edges == 0) return g;
  const auto vertex = m.dart_vertices();
  g.vertices = m.vertex_count();
  for (int e = 0; e < m.edges; ++e) {
    g.edges.emplace_back(vertex[static_cast<std::size_t>(2 * e)], vertex[static_cast<std::size_t>(2 * e + 1)]);
  }
  g.root_vertex = vertex[0];
  return g;
}

Multigraph Multigraph::without_edge(std::size_t e) const {
  Multigraph g = *this;
  g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(e));
  return g;
}

Multigraph Multigraph::contracted(std::size_t e) const {
  if (is_loop(e)) return without_edge(e);
  const auto [keep, gone] = std::minmax(edges[e].first, edges[e].second);
  auto relabel = [keep = keep, gone = gone](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  Multigraph g;
  g.vertices = vertices - 1;
  g.root_vertex = relabel(root_vertex);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == e) continue;
    g.edges.emplace_back(relabel(edges[i].first), relabel(edges[i].second));
  }
  return g;
}

std::vector<CombMap> enumerate_rooted_maps(int n) {
  if (n < 0) throw UsageError("negative edge count");
  if (n > kMaxEdges) throw CapExceeded("map enumeration is capped at " + std::to_string(kMaxEdges) + " edges");
  if (n == 0) return {CombMap{}};
  std::vector<CombMap> out;
  Generator gen(n);
  gen.run([&](const std::vector<int>& sigma) {
    CombMap m{n, sigma};
    if (m.vertex_count() - n + m.face_count() == 2) out.push_back(std::move(m));
  });
  return out;
}

std::uint64_t count_rooted_maps_all_genera(int n) {
  if (n > kMaxEdges) throw CapExceeded("map enumeration is capped at " + std::to_string(kMaxEdges) + " edges");
  if (n == 0) return 1;
  std::uint64_t count = 0;
  Generator gen(n);
  gen.run([&](const std::vector<int>&) { ++count; });
  return count;
}

MapFlags classify(const Multigraph& g) {
  MapFlags f;
  const auto e = g.edges.size();
  bool has_loop = false;
  for (std::size_t i = 0; i < e; ++i) has_loop = has_loop || g.is_loop(i);
  f.root_edge_is_loop = e > 0 && g.is_loop(0);

  f.bipartite = !has_loop;
  if (f.bipartite) {
    std::vector<int> side(static_cast<std::size_t>(g.vertices), -1);
    side[0] = 0;
    bool changed = true;
    while (changed && f.bipartite) {
      changed = false;
      for (const auto& [a, b] : g.edges) {
        auto& sa = side[static_cast<std::size_t>(a)];
        auto& sb = side[static_cast<std::size_t>(b)];
        if (sa >= 0 && sb < 0) {
          sb = 1 - sa;
          changed = true;
        } else if (sb >= 0 && sa < 0) {
          sa = 1 - sb;
          changed = true;
        } else if (sa >= 0 && sa == sb) {
          f.bipartite = false;
        }
      }
    }
  }

  if (e >= 2 && !has_loop) {
    f.two_connected = true;
    for (int v = 0; v < g.vertices && f.two_connected; ++v) {
      f.two_connected = connected_without(g, 1U << v);
    }
  }

  bool simple = !has_loop;
  for (std::size_t i = 0; i < e && simple; ++i) {
    for (std::size_t j = i + 1; j < e && simple; ++j) {
      const auto [a, b] = std::minmax(g.edges[i].first, g.edges[i].second);
      const auto [c, d] = std::minmax(g.edges[j].first, g.edges[j].second);
      simple = !(a == c && b == d);
    }
  }
  if (e >= 6 && simple && g.vertices >= 4 && f.two_connected) {
    f.three_connected = true;
    for (int u = 0; u < g.vertices && f.three_connected; ++u) {
      for (int v = u + 1; v < g.vertices && f.three_connected; ++v) {
        f.three_connected = connected_without(g, (1U << u) | (1U << v));
      }
    }
  }
  return f;
}

MapFlags classify(const CombMap& m) { return classify(Multigraph::of(m)); }

PolyNu potts_polynomial(const Multigraph& g, int q) {
  const PolyNu nu = nu_power(1);
  return deletion_contraction(g, nu - PolyNu(1), nu, [q](int v) {
    return PolyNu(pow(BigRational(q), static_cast<unsigned>(v)));
  });
}

Poly<PolyNu> potts_polynomial_symbolic(const Multigraph& g) {
  const Poly<PolyNu> nu(nu_power(1));
  return deletion_contraction(g, nu - Poly<PolyNu>(PolyNu(1)), nu, [](int v) {
    return Poly<PolyNu>::monomial(PolyNu(1), static_cast<std::size_t>(v));
  });
}

PolyNu potts_bruteforce(const Multigraph& g, int q) {
  std::vector<BigRational> counts(g.edges.size() + 1, BigRational(0));
  std::vector<int> colour(static_cast<std::size_t>(g.vertices), 0);
  while (true) {
    std::size_t mono = 0;
    for (const auto& [a, b] : g.edges) mono += colour[static_cast<std::size_t>(a)] == colour[static_cast<std::size_t>(b)];
    counts[mono] += 1;
    std::size_t i = 0;
    while (i < colour.size() && ++colour[i] == q) colour[i++] = 0;
    if (i == colour.size()) break;
  }
  return PolyNu(std::move(counts));
}

PolyNu colouring_weight(const Multigraph& g, Weighting::Root root) {
  using Root = Weighting::Root;
  if (g.edges.empty()) return root == Root::Any ? PolyNu(1) : PolyNu();
  if (root == Root::Deleted || root == Root::Contracted) {
    const Multigraph minor = root == Root::Deleted ? g.without_edge(0) : g.contracted(0);
    return potts_polynomial(minor, 2) * BigRational(mpz_class(1), mpz_class(2));
  }
  std::vector<BigRational> counts(g.edges.size() + 1, BigRational(0));
  const std::uint32_t free_vertices = static_cast<std::uint32_t>(g.vertices - 1);
  for (std::uint32_t mask = 0; mask < (1U << free_vertices); ++mask) {
    // the root vertex keeps colour 0; the others read their colour from mask
    auto colour = [&](int v) -> std::uint32_t {
      if (v == g.root_vertex) return 0;
      const int bit = v < g.root_vertex ? v : v - 1;
      return mask >> bit & 1U;
    };
    const bool root_mono = colour(g.edges[0].first) == colour(g.edges[0].second);
    if ((root == Root::Mono && !root_mono) || (root == Root::Bi && root_mono)) continue;
    std::size_t mono = 0;
    for (const auto& [a, b] : g.edges) mono += colour(a) == colour(b);
    counts[mono] += 1;
  }
  return PolyNu(std::move(counts));
}

Weighting Weighting::parse(const std::string& text) {
  Weighting w;
  std::stringstream ss(text);
  std::string part;
  bool any = false;
  while (std::getline(ss, part, '+')) {
    any = true;
    if (part == "all") continue;
    if (part == "bipartite_only") w.cls = Class::Bipartite;
    else if (part == "two_conn") w.cls = Class::TwoConnected;
    else if (part == "three_conn") w.cls = Class::ThreeConnected;
    else if (part == "mono_root") w.root = Root::Mono;
    else if (part == "bi_root") w.root = Root::Bi;
    else if (part == "del") w.root = Root::Deleted;
    else if (part == "con") w.root = Root::Contracted;
    else throw UsageError("unknown weighting '" + part + "'");
  }
  if (!any) throw UsageError("empty weighting");
  return w;
}

std::string Weighting::name() const {
  std::string c;
  switch (cls) {
    case Class::All: c = "all"; break;
    case Class::Bipartite: c = "bipartite_only"; break;
    case Class::TwoConnected: c = "two_conn"; break;
    case Class::ThreeConnected: c = "three_conn"; break;
  }
  switch (root) {
    case Root::Any: return c;
    case Root::Mono: return c + "+mono_root";
    case Root::Bi: return c + "+bi_root";
    case Root::Deleted: return c + "+del";
    case Root::Contracted: return c + "+con";
  }
  return c;
}

TruncSeries<PolyNu> oracle_series(int n_max, Weighting w) {
  if (n_max > kMaxEdges) throw CapExceeded("oracle series is capped at " + std::to_string(kMaxEdges) + " edges");
  auto out = TruncSeries<PolyNu>::zero(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    const auto maps = enumerate_rooted_maps(n);
    std::vector<PolyNu> weight(maps.size());
#pragma omp parallel for schedule(dynamic, 256)
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const Multigraph g = Multigraph::of(maps[i]);
      const MapFlags f = classify(g);
      bool keep = true;
      switch (w.cls) {
        case Weighting::Class::All: break;
        case Weighting::Class::Bipartite: keep = f.bipartite; break;
        case Weighting::Class::TwoConnected: keep = f.two_connected; break;
        case Weighting::Class::ThreeConnected: keep = f.three_connected; break;
      }
      if (keep) weight[i] = colouring_weight(g, w.root);
    }
    PolyNu total;
    for (const auto& x : weight) total += x;
    out[static_cast<std::size_t>(n)] = total;
  }
  return out;
}

std::string dump_map(const CombMap& m) {
  std::ostringstream os;
  if (m.edges == 0) {
    os << "()";
  } else {
    std::vector<char> seen(m.sigma.size(), 0);
    for (std::size_t d = 0; d < m.sigma.size(); ++d) {
      if (seen[d]) continue;
      os << '(';
      bool first = true;
      for (auto x = static_cast<int>(d); !seen[static_cast<std::size_t>(x)]; x = m.sigma[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        if (!first) os << ' ';
        first = false;
        os << x + 1;
      }
      os << ')';
    }
  }
  const MapFlags f = classify(m);
  os << std::boolalpha << " bipartite=" << f.bipartite << " two_connected=" << f.two_connected
     << " three_connected=" << f.three_connected << " root_loop=" << f.root_edge_is_loop;
  return os.str();
}

}  // namespace mapcount
