#include "usl2/repdec.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace usl2 {

namespace {

Matrix matrix_power(const Matrix& a, std::uint32_t k) {
  Matrix r = Matrix::identity(a.field(), a.rows());
  for (std::uint32_t i = 0; i < k; ++i) r = r * a;
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

// Coordinates of v in the canonical basis of W; throws if v is not in W.
Vec coordinates_in(const Subspace& w, const Vec& v) {
  if (!is_zero_vec(w.reduce(v))) throw std::domain_error("subspace is not stable");
  Vec c(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) c[i] = v[w.pivots()[i]];
  return c;
}

template <class Op>
void require_stable(const Subspace& w, Op&& op) {
  for (const auto& v : w.basis())
    if (!is_zero_vec(w.reduce(op(v)))) throw std::domain_error("subspace is not stable");
}

// Smallest left ideal containing the vectors.
Subspace left_ideal_closure(const Algebra& alg, const std::vector<Vec>& vectors) {
  Subspace s = Subspace::zero(alg.field(), alg.dim());
  std::deque<Vec> queue;
  for (const auto& v : vectors)
    if (s.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (Gen g : {Gen::E, Gen::F, Gen::H}) {
      Vec w = alg.left(g, v);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

std::vector<Vec> left_generators(const Algebra& alg, const Subspace& ideal) {
  std::vector<Vec> gens;
  Subspace cur = Subspace::zero(alg.field(), alg.dim());
  for (const auto& r : ideal.basis()) {
    if (cur.dim() == ideal.dim()) break;
    if (cur.contains(r)) continue;
    gens.push_back(r);
    cur = left_ideal_closure(alg, gens);
  }
  return gens;
}

void add_to(CompositionTally& t, Elem lambda, std::size_t mult) {
  if (mult) t[lambda] += mult;
}

}  // namespace

std::optional<std::string> ModuleAction::relation_failure() const {
  const Field& K = *field;
  const std::uint32_t p = K.characteristic();
  if (E.rows() != dim || F.rows() != dim || H.rows() != dim) return "shape";
  if (!(commutator(H, E) == E.scaled(2))) return "[h,e] = 2e";
  if (!(commutator(H, F) == F.scaled(K.from_int(-2)))) return "[h,f] = -2f";
  if (!(commutator(E, F) == H)) return "[e,f] = h";
  const Matrix id = Matrix::identity(field, dim);
  if (!matrix_power(E, p).is_zero()) return "e^p";
  const Matrix fp = matrix_power(F, p);
  if (chi.kind() == Character::Kind::NilpotentE ? !(fp == id) : !fp.is_zero()) return "f^p";
  Matrix hp_expected = H;
  if (chi.is_regular()) hp_expected = H + id.scaled(K.from_int(chi.a()));
  if (!(matrix_power(H, p) == hp_expected)) return "h^p";
  return std::nullopt;
}

ModuleAction simple_module(const FieldPtr& field, std::uint32_t lambda) {
  const std::uint32_t p = field->characteristic();
  if (lambda >= p) throw std::invalid_argument("simple module weight must lie in 0..p-1");
  const Field& K = *field;
  const std::size_t n = lambda + 1;
  ModuleAction m{field, Character::zero(), n, Matrix(field, n, n), Matrix(field, n, n),
                 Matrix(field, n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    m.H(i, i) = K.from_int(std::int64_t(lambda) - 2 * std::int64_t(i));
    if (i + 1 < n) m.F(i + 1, i) = 1;
    if (i > 0) m.E(i - 1, i) = K.from_int(std::int64_t(i) * (std::int64_t(lambda) + 1 - std::int64_t(i)));
  }
  return m;
}

ModuleAction baby_verma(const FieldPtr& field, const Character& chi, Elem lambda) {
  const Field& K = *field;
  const std::uint32_t p = K.characteristic();
  const Elem shift = chi.is_regular() ? K.from_int(chi.a()) : 0;
  if (K.sub(K.pow(lambda, p), lambda) != shift)
    throw std::invalid_argument("weight " + K.to_string(lambda) + " is not admissible for chi = " +
                                chi.tag());
  ModuleAction m{field, chi, p, Matrix(field, p, p), Matrix(field, p, p), Matrix(field, p, p)};
  for (std::uint32_t i = 0; i < p; ++i) {
    m.H(i, i) = K.sub(lambda, K.from_int(2 * std::int64_t(i)));
    if (i + 1 < p) m.F(i + 1, i) = 1;
    if (i > 0) {
      // i (lambda + 1 - i)
      m.E(i - 1, i) = K.mul(K.from_int(i), K.sub(K.add(lambda, 1), K.from_int(i)));
    }
  }
  if (chi.kind() == Character::Kind::NilpotentE) m.F(0, p - 1) = 1;
  return m;
}

ModuleAction adjoint_subquotient(const Algebra& alg, const Subspace& w, const Subspace& w_sub) {
  ModuleAction m;
  m.field = alg.field();
  m.chi = Character::zero();
  Matrix* slots[3] = {&m.E, &m.F, &m.H};
  const Gen gens[3] = {Gen::E, Gen::F, Gen::H};
  for (int g = 0; g < 3; ++g) {
    auto op = [&](const Vec& v) { return alg.ad(gens[g], v); };
    require_stable(w, op);
    require_stable(w_sub, op);
    *slots[g] = induced_action(w, w_sub, op);
  }
  m.dim = m.E.rows();
  return m;
}

ModuleAction adjoint_module(const Algebra& alg, const Block& block) {
  ModuleAction m;
  m.field = alg.field();
  m.chi = Character::zero();
  m.dim = block.dim();
  const auto& basis = block.subspace.basis();
  Matrix* slots[3] = {&m.E, &m.F, &m.H};
  const Gen gens[3] = {Gen::E, Gen::F, Gen::H};
  for (int g = 0; g < 3; ++g) {
    Matrix a(alg.field(), m.dim, m.dim);
    for (std::size_t j = 0; j < m.dim; ++j) {
      Vec c = coordinates_in(block.subspace, alg.ad(gens[g], basis[j]));
      for (std::size_t i = 0; i < m.dim; ++i) a(i, j) = c[i];
    }
    *slots[g] = std::move(a);
  }
  return m;
}

ModuleAction module_subquotient(const ModuleAction& m, const Subspace& w, const Subspace& w_sub) {
  ModuleAction out;
  out.field = m.field;
  out.chi = m.chi;
  const Matrix* src[3] = {&m.E, &m.F, &m.H};
  Matrix* dst[3] = {&out.E, &out.F, &out.H};
  for (int g = 0; g < 3; ++g) {
    auto op = [&](const Vec& v) { return src[g]->apply(v); };
    *dst[g] = induced_action(w, w_sub, op);
  }
  out.dim = out.E.rows();
  return out;
}

Vec apply_element(const ModuleAction& m, const Vec& coeffs, const Vec& w) {
  const Field& K = *m.field;
  const std::uint32_t p = K.characteristic();
  if (coeffs.size() != std::size_t(p) * p * p) throw std::invalid_argument("element size mismatch");
  auto axpy = [&](Vec& acc, Elem c, const Vec& v) {
    if (c != 0) K.sub_scaled(acc.data(), v.data(), K.neg(c), acc.size());
  };
  std::vector<Vec> hk(p);
  hk[0] = w;
  for (std::uint32_t k = 1; k < p; ++k) hk[k] = m.H.apply(hk[k - 1]);
  // sum_i E^i sum_j F^j sum_k c_ijk H^k w, Horner in E and in F
  Vec outer(m.dim, 0);
  for (std::uint32_t i = p; i-- > 0;) {
    Vec inner(m.dim, 0);
    for (std::uint32_t j = p; j-- > 0;) {
      inner = m.F.apply(inner);
      for (std::uint32_t k = 0; k < p; ++k)
        axpy(inner, coeffs[(std::size_t(i) * p + j) * p + k], hk[k]);
    }
    outer = m.E.apply(outer);
    for (std::size_t r = 0; r < m.dim; ++r) outer[r] = K.add(outer[r], inner[r]);
  }
  return outer;
}

Subspace generated_submodule(const ModuleAction& m, const std::vector<Vec>& vectors) {
  Subspace s = Subspace::zero(m.field, m.dim);
  std::deque<Vec> queue;
  for (const auto& v : vectors)
    if (s.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const Matrix* a : {&m.E, &m.F, &m.H}) {
      Vec w = a->apply(v);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

std::size_t hom_dim(const ModuleAction& m, const ModuleAction& n) {
  if (!m.field->same_as(*n.field)) throw std::invalid_argument("modules over different fields");
  const Field& K = *m.field;
  const std::size_t nm = m.dim, nn = n.dim, unknowns = nm * nn;
  if (unknowns == 0) return 0;
  const Matrix* am[3] = {&m.E, &m.F, &m.H};
  const Matrix* an[3] = {&n.E, &n.F, &n.H};
  // X is nn x nm, unknown (r, c) at r * nm + c.  Row (g, r, c): (X A_M - A_N X)_{r,c}.
  Matrix sys(m.field, 3 * unknowns, unknowns);
  for (int g = 0; g < 3; ++g)
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < nm; ++c) {
        auto row = sys.row(g * unknowns + r * nm + c);
        for (std::size_t k = 0; k < nm; ++k)
          row[r * nm + k] = K.add(row[r * nm + k], (*am[g])(k, c));
        for (std::size_t k = 0; k < nn; ++k)
          row[k * nm + c] = K.sub(row[k * nm + c], (*an[g])(r, k));
      }
  return unknowns - rank(sys);
}

std::size_t invariants_dim(const ModuleAction& m) {
  Matrix stacked(m.field, 3 * m.dim, m.dim);
  const Matrix* parts[3] = {&m.E, &m.F, &m.H};
  for (int g = 0; g < 3; ++g)
    for (std::size_t r = 0; r < m.dim; ++r)
      std::copy(parts[g]->row(r).begin(), parts[g]->row(r).end(), stacked.row(g * m.dim + r).begin());
  return m.dim - rank(stacked);
}

std::size_t hom_from_simple(const SimpleModule& l, const ModuleAction& m) {
  const Field& K = *m.field;
  const std::uint32_t p = K.characteristic();
  std::vector<const Matrix*> parts{&m.E};
  Matrix shifted = m.H - Matrix::identity(m.field, m.dim).scaled(l.lambda);
  parts.push_back(&shifted);
  Matrix fpow;
  if (l.f_order < p) {
    fpow = matrix_power(m.F, l.f_order);
    parts.push_back(&fpow);
  }
  Matrix stacked(m.field, parts.size() * m.dim, m.dim);
  for (std::size_t g = 0; g < parts.size(); ++g)
    for (std::size_t r = 0; r < m.dim; ++r)
      std::copy(parts[g]->row(r).begin(), parts[g]->row(r).end(), stacked.row(g * m.dim + r).begin());
  return m.dim - rank(stacked);
}

std::vector<SimpleModule> simple_modules(const Algebra& alg) {
  const FieldPtr& field = alg.field();
  const std::uint32_t p = alg.p();
  std::vector<SimpleModule> out;
  switch (alg.chi().kind()) {
    case Character::Kind::Zero:
      for (std::uint32_t l = 0; l < p; ++l) out.push_back({l, simple_module(field, l), l + 1});
      break;
    case Character::Kind::NilpotentE: {
      std::vector<std::uint32_t> reps{p - 1};
      for (std::uint32_t l = 0; l <= (p - 3) / 2; ++l) reps.push_back(l);
      for (auto l : reps) out.push_back({l, baby_verma(field, alg.chi(), l), p});
      break;
    }
    case Character::Kind::Regular:
      for (std::uint32_t i = 0; i < p; ++i) {
        const Elem l = field->add(field->generator(), i);
        out.push_back({l, baby_verma(field, alg.chi(), l), p});
      }
      break;
  }
  return out;
}

Subspace algebra_radical(const Algebra& alg, const std::vector<SimpleModule>& simples) {
  const std::uint32_t p = alg.p();
  std::size_t rows = 0;
  for (const auto& s : simples) rows += s.action.dim * s.action.dim;
  Matrix rep(alg.field(), rows, alg.dim());
  std::size_t offset = 0;
  for (const auto& s : simples) {
    const auto& m = s.action;
    std::vector<Matrix> ep, fp, hp;
    for (std::uint32_t k = 0; k < p; ++k) {
      ep.push_back(matrix_power(m.E, k));
      fp.push_back(matrix_power(m.F, k));
      hp.push_back(matrix_power(m.H, k));
    }
    for (std::uint32_t i = 0; i < p; ++i)
      for (std::uint32_t j = 0; j < p; ++j) {
        const Matrix efj = ep[i] * fp[j];
        for (std::uint32_t k = 0; k < p; ++k) {
          const Matrix img = efj * hp[k];
          const std::size_t col = alg.index(i, j, k);
          for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) rep(offset + r * m.dim + c, col) = img(r, c);
        }
      }
    offset += m.dim * m.dim;
  }
  return kernel(rep);
}

bool is_two_sided_ideal(const Algebra& alg, const Subspace& s) {
  for (const auto& v : s.basis())
    for (Gen g : {Gen::E, Gen::F, Gen::H})
      if (!s.contains(alg.left(g, v)) || !s.contains(alg.right(g, v))) return false;
  return true;
}

std::optional<std::size_t> nilpotency_index(const Algebra& alg, const Subspace& rad,
                                            std::size_t max_k) {
  if (rad.dim() == 0) return 0;
  const auto gens = left_generators(alg, rad);
  Subspace power = rad;
  for (std::size_t k = 1; k <= max_k; ++k) {
    if (power.dim() == 0) return k;
    // rad * J = U g_1 J + ... + U g_r J
    std::vector<Vec> seeds;
    for (const auto& g : gens)
      for (const auto& y : power.basis()) seeds.push_back(alg.mul(g, y));
    power = left_ideal_closure(alg, seeds);
  }
  return std::nullopt;
}

RepContext::RepContext(AlgebraPtr alg) : alg_(std::move(alg)) {
  simples_ = simple_modules(*alg_);
  radical_ = algebra_radical(*alg_, simples_);
  generators_ = left_generators(*alg_, radical_);
}

std::vector<ModuleAction> radical_series(const RepContext& ctx, const ModuleAction& m) {
  std::vector<ModuleAction> layers;
  Subspace cur = Subspace::full(m.field, m.dim);
  while (cur.dim() > 0) {
    std::vector<Vec> seeds;
    for (const auto& g : ctx.radical_generators())
      for (const auto& w : cur.basis()) seeds.push_back(apply_element(m, g, w));
    Subspace next = generated_submodule(m, seeds);
    if (next.dim() == cur.dim()) throw std::domain_error("radical does not act nilpotently");
    layers.push_back(module_subquotient(m, cur, next));
    cur = std::move(next);
  }
  return layers;
}

CompositionTally composition_tally(const RepContext& ctx, const ModuleAction& m) {
  CompositionTally t;
  for (const auto& layer : radical_series(ctx, m))
    for (const auto& s : ctx.simples()) add_to(t, s.lambda, hom_from_simple(s, layer));
  return t;
}

std::size_t tally_dimension(const RepContext& ctx, const CompositionTally& t) {
  std::size_t total = 0;
  for (const auto& [lambda, mult] : t) {
    auto it = std::find_if(ctx.simples().begin(), ctx.simples().end(),
                           [&](const SimpleModule& s) { return s.lambda == lambda; });
    if (it == ctx.simples().end()) throw std::invalid_argument("tally names an unknown simple");
    total += mult * it->action.dim;
  }
  return total;
}

ProjectivityCertificate projectivity_certificate(const ModuleAction& m) {
  ProjectivityCertificate c;
  c.jordan_type = jordan_type_nilpotent(m.E);
  const std::size_t p = m.field->characteristic();
  c.certified = std::all_of(c.jordan_type.begin(), c.jordan_type.end(),
                            [&](std::size_t part) { return part == p; });
  return c;
}

ModuleAction graded_piece_module(const Algebra& alg, const Block& block, PieceObject object,
                                 FiltrationKind kind, std::size_t d) {
  const auto terms = filtration_terms(alg, block, kind);
  if (d >= terms.size()) throw std::invalid_argument("degree beyond the filtration");
  const Subspace zero = Subspace::zero(alg.field(), alg.dim());
  const Subspace& hi = terms[d];
  const Subspace& lo = d == 0 ? zero : terms[d - 1];
  switch (object) {
    case PieceObject::Block:
      return adjoint_subquotient(alg, hi, lo);
    case PieceObject::Ideal: {
      const Subspace ideal = ideal_c_minus_alpha(alg, block);
      return adjoint_subquotient(alg, intersect(hi, ideal), intersect(lo, ideal));
    }
    case PieceObject::Quotient: {
      const Subspace ideal = ideal_c_minus_alpha(alg, block);
      return adjoint_subquotient(alg, sum(hi, ideal), sum(lo, ideal));
    }
  }
  throw std::invalid_argument("bad piece object");
}

CompositionTally projective_cover_tally(std::uint32_t p, std::uint32_t lambda) {
  if (lambda >= p) throw std::invalid_argument("weight must lie in 0..p-1");
  CompositionTally t;
  if (lambda == p - 1) {
    t[lambda] = 1;
    return t;
  }
  t[lambda] += 2;
  t[p - 2 - lambda] += 2;
  return t;
}

namespace {
void merge(CompositionTally& into, const CompositionTally& from) {
  for (const auto& [k, v] : from) into[k] += v;
}
}  // namespace

CompositionTally expected_quotient_tally(std::uint32_t p, std::uint32_t omega) {
  CompositionTally t;
  for (std::uint32_t i = 0; i <= (p - 1) / 2; ++i) merge(t, projective_cover_tally(p, 2 * i));
  for (std::uint32_t i = p; i < p + omega; ++i) add_to(t, 3 * p - 2 * i - 2, 2);
  return t;
}

CompositionTally expected_ideal_tally(std::uint32_t p, std::uint32_t omega) {
  CompositionTally t;
  if (omega == 0) return t;
  for (std::uint32_t i = omega; i <= (p - 1) / 2; ++i) merge(t, projective_cover_tally(p, 2 * i));
  for (std::uint32_t i = p - omega + 1; i <= p; ++i) add_to(t, 2 * p - 2 * i, 2);
  return t;
}

CompositionTally expected_adjoint_tally(std::uint32_t p, std::uint32_t omega) {
  CompositionTally t = expected_quotient_tally(p, omega);
  merge(t, expected_ideal_tally(p, omega));
  return t;
}

std::string tally_to_string(const Field& field, const CompositionTally& t) {
  std::string s = "{";
  bool first = true;
  for (const auto& [lambda, mult] : t) {
    if (!first) s += ", ";
    first = false;
    s += "L" + field.to_string(lambda) + ":" + std::to_string(mult);
  }
  return s + "}";
}

}  // namespace usl2
