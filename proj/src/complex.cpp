#include "markgraph/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace markgraph {

std::string_view to_string(DifferentialKind k) {
  switch (k) {
    case DifferentialKind::delta: return "delta";
    case DifferentialKind::d: return "d";
    case DifferentialKind::D: return "D";
    case DifferentialKind::edge_sector: return "S";
    case DifferentialKind::cycle_sector: return "T";
    case DifferentialKind::total: return "total";
  }
  return "?";
}

DifferentialKind differential_kind_from_string(std::string_view name) {
  for (auto k : {DifferentialKind::delta, DifferentialKind::d, DifferentialKind::D,
                 DifferentialKind::edge_sector, DifferentialKind::cycle_sector,
                 DifferentialKind::total}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown differential kind '" + std::string(name) + "'");
}

std::string_view to_string(SignFault f) {
  switch (f) {
    case SignFault::none: return "none";
    case SignFault::delta_global: return "delta-global";
    case SignFault::delta_term: return "delta-term";
    case SignFault::d_term: return "d-term";
    case SignFault::total_sign: return "total-sign";
  }
  return "?";
}

SignFault sign_fault_from_string(std::string_view name) {
  for (auto f : {SignFault::none, SignFault::delta_global, SignFault::delta_term,
                 SignFault::d_term, SignFault::total_sign}) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown sign fault '" + std::string(name) + "'");
}

namespace {

// All ways to split each independent set into 1- and 2-marked parts,
// keeping those accepted by `keep(ones, twos)`.
template <typename Keep>
std::vector<Marking> markings_where(const ConflictSystem& cs, std::size_t min_size,
                                    Keep keep) {
  std::vector<Marking> out;
  for (const auto& set : independent_sets(cs)) {
    if (set.size() < min_size) continue;
    const std::size_t k = set.size();
    for (std::uint64_t twos = 0; twos < (std::uint64_t{1} << k); ++twos) {
      const auto n_twos = static_cast<std::size_t>(std::popcount(twos));
      if (!keep(k - n_twos, n_twos)) continue;
      Marking m(cs.size());
      for (std::size_t b = 0; b < k; ++b) {
        m = m.with_value(set[b], (twos >> b) & 1 ? 2 : 1);
      }
      out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int parity_sign(std::size_t count) { return count % 2 == 0 ? 1 : -1; }

bool in_sector(const ConflictSystem& cs, std::size_t p, std::optional<Sector> sector) {
  return !sector || cs.element(p).sector == *sector;
}

void add_delta(const ConflictSystem& cs, const Marking& m, std::optional<Sector> sector,
               SignRules rules, std::int64_t scale, Chain& out) {
  std::size_t marked = 0;
  std::size_t ones = 0;
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (!in_sector(cs, p, sector)) continue;
    if (m.is_marked(p)) ++marked;
    if (m.value(p) == 1) ++ones;
  }
  const int global =
      rules.fault == SignFault::delta_global ? 1 : parity_sign(marked);
  std::size_t ones_seen = 0;
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (!in_sector(cs, p, sector) || m.value(p) != 1) continue;
    ++ones_seen;
    const std::size_t later = ones - ones_seen;
    const int term = rules.fault == SignFault::delta_term ? 1 : parity_sign(later);
    out.add(m.with_value(p, 2), scale * global * term);
  }
}

void add_d(const ConflictSystem& cs, const Marking& m, std::optional<Sector> sector,
           SignRules rules, std::int64_t scale, Chain& out) {
  std::size_t earlier = 0;
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (!in_sector(cs, p, sector)) continue;
    if (m.is_marked(p)) {
      ++earlier;
      continue;
    }
    if (is_blocked(cs, m, p)) continue;
    const int term = rules.fault == SignFault::d_term ? 1 : parity_sign(earlier);
    out.add(m.with_value(p, 2), scale * term);
  }
}

}  // namespace

std::vector<Marking> graded_basis(const ConflictSystem& cs, Bigrade grade) {
  return markings_where(cs, grade.i + grade.j, [&](std::size_t ones, std::size_t twos) {
    return ones == grade.i && twos == grade.j;
  });
}

std::vector<Marking> graded_basis(const ConflictSystem& cs, std::size_t degree) {
  return markings_where(cs, degree,
                        [&](std::size_t, std::size_t twos) { return twos == degree; });
}

std::size_t top_degree(const ConflictSystem& cs) { return independence_number(cs); }

Chain apply_delta(const ConflictSystem& cs, const Marking& m, SignRules rules) {
  return apply(cs, DifferentialKind::delta, m, rules);
}

Chain apply_d(const ConflictSystem& cs, const Marking& m, SignRules rules) {
  return apply(cs, DifferentialKind::d, m, rules);
}

Chain apply_D(const ConflictSystem& cs, const Marking& m, SignRules rules) {
  return apply(cs, DifferentialKind::D, m, rules);
}

Chain apply(const ConflictSystem& cs, DifferentialKind kind, const Marking& m,
            SignRules rules) {
  require_admissible(cs, m);
  Chain out(cs.label());
  switch (kind) {
    case DifferentialKind::delta:
      add_delta(cs, m, std::nullopt, rules, 1, out);
      break;
    case DifferentialKind::d:
      add_d(cs, m, std::nullopt, rules, 1, out);
      break;
    case DifferentialKind::D:
      add_delta(cs, m, std::nullopt, rules, 1, out);
      add_d(cs, m, std::nullopt, rules, 1, out);
      break;
    case DifferentialKind::edge_sector:
      add_delta(cs, m, Sector::edge, rules, 1, out);
      add_d(cs, m, Sector::edge, rules, 1, out);
      break;
    case DifferentialKind::cycle_sector:
      add_delta(cs, m, Sector::cycle, rules, 1, out);
      add_d(cs, m, Sector::cycle, rules, 1, out);
      break;
    case DifferentialKind::total: {
      add_delta(cs, m, Sector::edge, rules, 1, out);
      add_d(cs, m, Sector::edge, rules, 1, out);
      const std::int64_t t_sign =
          rules.fault == SignFault::total_sign ? 1 : parity_sign(m.count(2));
      add_delta(cs, m, Sector::cycle, rules, t_sign, out);
      add_d(cs, m, Sector::cycle, rules, t_sign, out);
      break;
    }
  }
  return out;
}

Chain apply(const ConflictSystem& cs, DifferentialKind kind, const Chain& c,
            SignRules rules) {
  Chain out(cs.label());
  for (const auto& [m, coeff] : c.terms()) {
    const Chain images = apply(cs, kind, m, rules);
    for (const auto& [image, k] : images.terms()) {
      out.add(image, coeff * k);
    }
  }
  return out;
}

DifferentialMatrix differential_matrix(const ConflictSystem& cs, DifferentialKind kind,
                                       std::size_t source_degree, SignRules rules) {
  const std::size_t top = top_degree(cs);
  if (source_degree > top) {
    throw std::out_of_range("degree " + std::to_string(source_degree) +
                            " is above the top degree " + std::to_string(top));
  }
  DifferentialMatrix out;
  out.cols = graded_basis(cs, source_degree);
  out.rows = graded_basis(cs, source_degree + 1);
  out.matrix = matrix_of(out.cols, out.rows,
                         [&](const Marking& m) { return apply(cs, kind, m, rules); });
  return out;
}

std::vector<std::size_t> MarkingComplex::dims() const {
  std::vector<std::size_t> out;
  for (const auto& b : bases) out.push_back(b.size());
  return out;
}

MarkingComplex build_complex(const ConflictSystem& cs, DifferentialKind kind,
                             SignRules rules) {
  MarkingComplex c;
  for (auto& m : markings_where(cs, 0, [](std::size_t, std::size_t) { return true; })) {
    const std::size_t n = m.count(2);
    if (c.bases.size() <= n) c.bases.resize(n + 1);
    c.bases[n].push_back(std::move(m));
  }
  for (std::size_t n = 0; n < c.bases.size(); ++n) {
    static const std::vector<Marking> none;
    const auto& target = n + 1 < c.bases.size() ? c.bases[n + 1] : none;
    c.maps.push_back(matrix_of(c.bases[n], target, [&](const Marking& m) {
      return apply(cs, kind, m, rules);
    }));
  }
  return c;
}

Transport::Transport(const ConflictSystem& source, const ConflictSystem& vertex_model)
    : source_(&source), model_(&vertex_model) {
  if (source.size() != vertex_model.size()) {
    throw std::invalid_argument("transport: systems have " + std::to_string(source.size()) +
                                " and " + std::to_string(vertex_model.size()) +
                                " elements");
  }
  for (const auto& e : vertex_model.elements()) {
    if (e.sector != Sector::vertex) {
      throw std::invalid_argument("transport: target is not a vertex-marking system");
    }
  }
  if (source.conflict_pairs() != vertex_model.conflict_pairs()) {
    throw std::invalid_argument(
        "transport: vertex adjacency differs from the source conflict relation");
  }
}

Marking Transport::operator()(const Marking& m) const {
  require_admissible(*source_, m);
  Marking out(model_->size());
  for (std::size_t p = 0; p < m.size(); ++p) out = out.with_value(p, m.value(p));
  return out;
}

Marking Transport::inverse(const Marking& m) const {
  require_admissible(*model_, m);
  Marking out(source_->size());
  for (std::size_t v = 0; v < m.size(); ++v) out = out.with_value(v, m.value(v));
  return out;
}

Chain Transport::operator()(const Chain& c) const {
  Chain out(model_->label());
  for (const auto& [m, coeff] : c.terms()) out.add((*this)(m), coeff);
  return out;
}

ConflictSystem vertex_model(const ConflictSystem& cs) {
  return vertex_conflict_system(cs.size(), cs.conflict_pairs(),
                                "vertex-model(" + cs.label() + ")");
}

Chain one_mark_generator(const ConflictSystem& cs, const Marking& m,
                         std::optional<Sector> sector) {
  require_admissible(cs, m);
  Chain out(cs.label());
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (!in_sector(cs, p, sector) || m.is_marked(p) || is_blocked(cs, m, p)) continue;
    out.add(m.with_value(p, 1), 1);
  }
  return out;
}

Chain exp_generator(const ConflictSystem& cs, const std::vector<Sector>& sectors) {
  Chain out(cs.label());
  for (const auto& set : independent_sets(cs)) {
    bool allowed = std::all_of(set.begin(), set.end(), [&](std::size_t p) {
      return std::find(sectors.begin(), sectors.end(), cs.element(p).sector) !=
             sectors.end();
    });
    if (!allowed) continue;
    Marking m(cs.size());
    for (std::size_t p : set) m = m.with_value(p, 1);
    out.add(m, 1);
  }
  return out;
}

}  // namespace markgraph
