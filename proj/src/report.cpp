#include "usl2/report.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace usl2 {

namespace {

// Published p = 5, chi = 0 rows, indexed by omega.
const std::vector<std::vector<std::size_t>> kPf5 = {
    {1, 4, 9, 16, 25, 25, 25, 25, 25, 25, 25, 25, 25},
    {1, 4, 10, 20, 34, 49, 50, 50, 50, 50, 50, 50, 50},
    {1, 4, 10, 20, 34, 45, 50, 50, 50, 50, 50, 50, 50}};
const std::vector<std::vector<std::size_t>> kInt5 = {
    {0, 0, 0, 0, 0, 0, 0, 0, 9, 16, 21, 24, 25},
    {0, 0, 0, 0, 0, 0, 1, 16, 30, 40, 46, 49, 50},
    {0, 0, 0, 0, 0, 0, 5, 16, 30, 40, 46, 49, 50}};

std::string field_name(const Field& f) {
  const std::string p = std::to_string(f.characteristic());
  if (f.is_prime_field()) return "F_" + p;
  return "F_" + p + "[t]/(t^" + p + "-t-" + std::to_string(f.defining_constant()) + ")";
}

Elem parse_element(const Field& field, const std::string& text) {
  try {
    if (!text.empty() && text.front() == '[') {
      if (text.back() != ']') throw UsageError("unterminated coefficient vector");
      std::vector<std::uint32_t> coeffs;
      std::stringstream ss(text.substr(1, text.size() - 2));
      std::string item;
      while (std::getline(ss, item, ',')) {
        const long long v = std::stoll(item);
        coeffs.push_back(field.from_int(v));
      }
      if (coeffs.size() > field.degree()) throw UsageError("too many coefficients");
      coeffs.resize(field.degree(), 0);
      return field.from_coefficients(coeffs);
    }
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw UsageError("trailing characters");
    return field.from_int(v);
  } catch (const UsageError& e) {
    throw UsageError("cannot parse field element '" + text + "': " + e.what());
  } catch (const std::exception&) {
    throw UsageError("cannot parse field element '" + text + "'");
  }
}

std::vector<BlockLabel> selected_labels(const Algebra& alg, const JobSpec& spec) {
  if (spec.omega) {
    if (alg.chi().is_regular())
      throw UsageError("--omega is only meaningful for chi = zero or e; use --alpha");
    if (*spec.omega > (alg.p() - 1) / 2)
      throw UsageError("--omega must lie in 0.." + std::to_string((alg.p() - 1) / 2));
    return {label_for_omega(alg, *spec.omega)};
  }
  if (spec.alpha) {
    const Elem a = parse_element(*alg.field(), *spec.alpha);
    try {
      return {label_for_alpha(alg, a)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return block_labels(alg);
}

struct Setup {
  AlgebraPtr alg;
  std::vector<Block> blocks;
  bool all_blocks = false;
};

Setup setup(const JobSpec& spec) {
  validate(spec);
  Setup s;
  s.alg = Algebra::create(spec.p, spec.chi);
  const auto labels = selected_labels(*s.alg, spec);
  s.all_blocks = labels.size() == block_labels(*s.alg).size();
  for (const auto& l : labels) s.blocks.push_back(make_block(*s.alg, l));
  if (spec.corrupt_idempotent && !s.blocks.empty()) {
    Vec v = s.blocks.front().idempotent.coeffs();
    const std::size_t h = s.alg->index(0, 0, 1);
    v[h] = s.alg->field()->add(v[h], 1);
    s.blocks.front().idempotent = s.alg->element(std::move(v));
  }
  return s;
}

class Checks {
 public:
  Checks(JobResult& r, const Field& field) : r_(r), field_(field) {}

  void add(std::string name, const std::string& block, Json expected, Json computed,
           std::string basis) {
    Check c;
    c.name = std::move(name);
    c.block = block;
    c.pass = expected == computed;
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    c.basis = std::move(basis);
    r_.checks.push_back(std::move(c));
  }
  void holds(std::string name, const std::string& block, bool value) {
    add(std::move(name), block, true, value, "identity");
  }
  std::string label(const Block& b) const { return b.label.display(field_); }

 private:
  JobResult& r_;
  const Field& field_;
};

JobResult start(const JobSpec& spec, const Setup& s) {
  JobResult r;
  r.p = spec.p;
  r.chi = spec.chi.tag();
  r.field = field_name(*s.alg->field());
  for (const auto& b : s.blocks) {
    BlockInfo info;
    info.label = b.label.display(*s.alg->field());
    info.alpha = s.alg->field()->to_string(b.label.alpha);
    info.omega = b.label.omega;
    info.idempotent = b.poly.to_string("c");
    info.dim = b.dim();
    info.coinvariants_dim = coinvariants(*s.alg, b).dim;
    r.blocks.push_back(std::move(info));
  }
  return r;
}

std::size_t expected_block_dim(const Algebra& alg, const BlockLabel& l) {
  const std::size_t p2 = std::size_t(alg.p()) * alg.p();
  if (alg.chi().is_regular() || l.alpha == 0) return p2;
  return 2 * p2;
}

void idempotent_checks(const Setup& s, Checks& c) {
  const Algebra& alg = *s.alg;
  const std::size_t p = alg.p();
  const AlgElem e = alg.generator(Gen::E), f = alg.generator(Gen::F), h = alg.generator(Gen::H);
  for (const auto& b : s.blocks) {
    const auto& pi = b.idempotent;
    const std::string l = c.label(b);
    c.holds("idempotent_square", l, pi * pi == pi);
    c.holds("idempotent_central", l,
            commutator(pi, e).is_zero() && commutator(pi, f).is_zero() &&
                commutator(pi, h).is_zero());
    c.add("block_dim", l, expected_block_dim(alg, b.label), b.dim(), "closed_form");
    const auto co = coinvariants(alg, b);
    const bool trivial = alg.chi().is_regular() || b.label.alpha == 0;
    c.add("coinvariants_dim", l, trivial ? 1 : 2, co.dim, "closed_form");
    c.holds("coinvariants_square_vanishes", l, co.square_vanishes);
    if (!trivial) c.add("coinvariants_linear_vanishes", l, false, co.linear_vanishes, "identity");
  }
  if (!s.all_blocks) return;
  bool orthogonal = true;
  Vec total = alg.zero_vec();
  std::size_t dims = 0;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    const auto& pi = s.blocks[i].idempotent;
    for (std::size_t j = i + 1; j < s.blocks.size(); ++j)
      orthogonal = orthogonal && (pi * s.blocks[j].idempotent).is_zero();
    for (std::size_t k = 0; k < total.size(); ++k)
      total[k] = alg.field()->add(total[k], pi.coeffs()[k]);
    dims += s.blocks[i].dim();
  }
  c.holds("idempotents_orthogonal", "", orthogonal);
  c.holds("idempotents_sum_to_one", "", total == alg.unit(0));
  c.add("block_dims_total", "", p * p * p, dims, "closed_form");
  c.holds("center_relation_vanishes", "", alg.eval_center_poly(center_relation(alg)).is_zero());
  if (alg.chi().is_regular()) {
    const auto roots = roots_with_multiplicity(center_relation(alg));
    std::size_t simple = 0;
    for (const auto& r : roots) simple += r.multiplicity == 1 ? 1 : 0;
    c.add("center_relation_simple_roots", "", p, simple, "closed_form");
  }
}

std::vector<std::size_t> truncate(std::vector<std::size_t> v, std::size_t len) {
  if (v.size() > len) v.resize(len);
  return v;
}

std::vector<std::size_t> expected_sh_ideal(std::size_t p, std::size_t omega) {
  std::vector<std::size_t> out{0};
  if (omega == 0) return {};
  for (std::size_t d = 1; d <= p - omega; ++d) out.push_back(2 * d - 1);
  for (std::size_t d = p - omega + 1; d <= p; ++d) out.push_back(2 * p - 2 * d + 1);
  return out;
}

void nilcone_checks(std::uint32_t p, const NilconeRing& ring, Checks& c) {
  c.add("nilcone_dims", "", nilcone_dims_closed(p), ring.dims, "closed_form");
  c.add("nilcone_total", "", nilcone_total(p), ring.total(), "closed_form");
  bool weights = true, symmetric = true;
  for (std::size_t d = 0; d < ring.dims.size(); ++d) {
    weights = weights && ring.weights[d] == nilcone_weights_closed(p, d);
    for (std::uint32_t k = 1; k < p; ++k)
      symmetric = symmetric && ring.weights[d][k] == ring.weights[d][p - k];
  }
  c.holds("nilcone_weights", "", weights);
  c.holds("nilcone_weight_symmetry", "", symmetric);
}

void table_invariants(const Algebra& alg, const Block& b, const FiltrationTable& t, Checks& c) {
  const std::string name = to_string(t.kind);
  c.add(name + "_exhaustive", c.label(b), b.dim(), t.cumulative.back(), "identity");
  if (t.kind != FiltrationKind::INT) c.add(name + "_degree0", c.label(b), 1, t.cumulative.front(), "identity");
  if (alg.p() == 5 && alg.chi().kind() == Character::Kind::Zero && b.label.omega) {
    const auto w = *b.label.omega;
    if (t.kind == FiltrationKind::PF) c.add("pf_reference_row", c.label(b), kPf5[w], t.cumulative, "reference_table");
    if (t.kind == FiltrationKind::INT) c.add("int_reference_row", c.label(b), kInt5[w], t.cumulative, "reference_table");
  }
}

std::vector<std::size_t> hom_matrix(const std::vector<SimpleModule>& simples) {
  std::vector<std::size_t> out;
  for (const auto& a : simples)
    for (const auto& b : simples) out.push_back(hom_dim(a.action, b.action));
  return out;
}

}  // namespace

bool JobResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool Report::ok() const {
  return std::all_of(results.begin(), results.end(), [](const JobResult& r) { return r.ok(); });
}

std::size_t Report::checks() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.checks.size();
  return n;
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& r : results)
    for (const auto& c : r.checks) n += c.pass ? 0 : 1;
  return n;
}

Character parse_character(const std::string& tag, std::optional<std::uint32_t> a) {
  if (tag == "zero") return Character::zero();
  if (tag == "e") return Character::nilpotent_e();
  if (tag == "regular") {
    if (!a) throw UsageError("--chi regular needs --a");
    if (*a == 0) throw UsageError("--a must be nonzero mod p");
    return Character::regular(*a);
  }
  throw UsageError("unknown character '" + tag + "' (expected zero, e or regular)");
}

void validate(const JobSpec& spec) {
  if (spec.p < kMinPrime || spec.p > kMaxPrime || !is_prime(spec.p) || spec.p == 2)
    throw UsageError("p must be an odd prime in " + std::to_string(kMinPrime) + ".." +
                     std::to_string(kMaxPrime) + " (got " + std::to_string(spec.p) + ")");
  if (spec.chi.is_regular()) {
    if (spec.p > kMaxRegularPrime)
      throw UsageError("regular characters are supported for p <= " +
                       std::to_string(kMaxRegularPrime));
    if (spec.chi.a() % spec.p == 0 || spec.chi.a() >= spec.p)
      throw UsageError("--a must lie in 1..p-1");
  }
  if (spec.omega && spec.alpha) throw UsageError("--omega and --alpha are mutually exclusive");
  if (spec.omega) {
    if (spec.chi.is_regular())
      throw UsageError("--omega is only meaningful for chi = zero or e; use --alpha");
    if (*spec.omega > (spec.p - 1) / 2)
      throw UsageError("--omega must lie in 0.." + std::to_string((spec.p - 1) / 2));
  }
  if (spec.alpha) {
    const FieldPtr field = spec.chi.is_regular() ? Field::artin_schreier(spec.p, spec.chi.a())
                                                 : Field::prime(spec.p);
    const Field& K = *field;
    const Elem x = parse_element(K, *spec.alpha);
    // alpha indexes a block iff it is a root of c^p - 2 c^{(p+1)/2} + c - a^2
    const Elem a = K.from_int(spec.chi.a());
    const Elem v = K.sub(K.add(K.sub(K.pow(x, spec.p), K.mul(2, K.pow(x, (spec.p + 1) / 2))), x),
                         K.mul(a, a));
    if (v != 0) throw UsageError("alpha = " + *spec.alpha + " does not label a block");
  }
}

JobResult run_blocks(const JobSpec& spec) {
  const Setup s = setup(spec);
  JobResult r = start(spec, s);
  Checks c(r, *s.alg->field());
  idempotent_checks(s, c);
  return r;
}

JobResult run_filtration(const JobSpec& spec) {
  const Setup s = setup(spec);
  JobResult r = start(spec, s);
  Checks c(r, *s.alg->field());
  auto kinds = spec.kinds;
  if (kinds.empty()) kinds = {FiltrationKind::PF, FiltrationKind::INT, FiltrationKind::SH};
  for (const auto& b : s.blocks)
    for (auto k : kinds) {
      auto t = filtration_table(*s.alg, b, k);
      table_invariants(*s.alg, b, t, c);
      r.table_labels.push_back(c.label(b));
      r.tables.push_back(std::move(t));
    }
  return r;
}

JobResult run_verify(const JobSpec& spec) {
  const Setup s = setup(spec);
  JobResult r = start(spec, s);
  const Algebra& alg = *s.alg;
  const std::uint32_t p = alg.p();
  const std::size_t p2 = std::size_t(p) * p, p3 = p2 * p;
  Checks c(r, *alg.field());
  idempotent_checks(s, c);

  const auto kind = alg.chi().kind();
  const bool is_zero = kind == Character::Kind::Zero;
  NilconeRing ring;
  if (is_zero || alg.chi().is_regular()) ring = nilcone_oracle(p);
  if (is_zero) nilcone_checks(p, ring, c);

  // ideal dims and the nilpotency witness are cheap at every p
  for (const auto& b : s.blocks) {
    if (alg.chi().is_regular()) continue;
    const std::size_t w = *b.label.omega;
    const Subspace ideal = ideal_c_minus_alpha(alg, b);
    std::size_t expected = 0;
    if (w > 0) expected = is_zero ? w * w + (p - w) * (p - w) : p2;
    c.add("ideal_dim", c.label(b), expected, ideal.dim(), "closed_form");
    if (is_zero && w > 0) c.holds("nilpotency_witness", c.label(b), nilpotency_witness(alg, b));
  }
  if (p > kMaxHeavyPrime) return r;

  const Matrix gram = gram_form(alg);
  c.add("gram_rank", "", p3, rank(gram), "identity");
  c.holds("pbw_perps", "", check_pbw_perps(alg, gram).ok);

  for (const auto& b : s.blocks) {
    const std::string l = c.label(b);
    const auto pf = filtration_terms(alg, b, FiltrationKind::PF);
    const auto in = filtration_terms(alg, b, FiltrationKind::INT);
    const auto sh = filtration_terms(alg, b, FiltrationKind::SH);
    for (const auto* terms : {&pf, &in, &sh}) {
      const auto k = terms == &pf ? FiltrationKind::PF
                                  : (terms == &in ? FiltrationKind::INT : FiltrationKind::SH);
      auto t = make_table(b.label, k, *terms);
      table_invariants(alg, b, t, c);
      r.table_labels.push_back(l);
      r.tables.push_back(std::move(t));
    }
    const auto dual = duality_check(alg, b, gram);
    c.holds("duality_subspaces", l, dual.subspaces_ok);
    c.holds("duality_dims", l, dual.dims_ok);

    const bool trivial_coinvariants = alg.chi().is_regular() || b.label.alpha == 0;
    if (trivial_coinvariants) c.holds("sh_equals_pf", l, sh == pf);

    if (is_zero) {
      const std::size_t w = *b.label.omega;
      const Subspace ideal = ideal_c_minus_alpha(alg, b);
      const auto gsh = ideal_grading(alg, sh, ideal);
      const auto gpf = ideal_grading(alg, pf, ideal);
      c.add("sh_quotient_graded", l, truncate(nilcone_dims_closed(p), p + w),
            trim_zeros(gsh.quotient_graded), "closed_form");
      const auto cmp = compare_block_quotient(alg, b, ring);
      c.holds("sh_quotient_dims_vs_nilcone", l, cmp.dims_ok);
      c.holds("sh_quotient_weights_vs_nilcone", l, cmp.weights_ok);
      const auto qdims = gsh.quotient_graded;
      c.add("quotient_total", l, p2 + 2 * w * (p - w),
            std::accumulate(qdims.begin(), qdims.end(), std::size_t{0}), "closed_form");
      c.add("sh_ideal_graded", l, expected_sh_ideal(p, w), trim_zeros(gsh.ideal_graded),
            "closed_form");
      auto shifted = trim_zeros(gsh.ideal_graded);
      if (!shifted.empty()) shifted.insert(shifted.begin(), 0);
      c.add("pf_ideal_graded_shift", l, shifted, trim_zeros(gpf.ideal_graded), "identity");
      c.add("pf_quotient_equals_sh_quotient", l, trim_zeros(gsh.quotient_graded),
            trim_zeros(gpf.quotient_graded), "identity");
    }
    if (alg.chi().is_regular()) {
      const auto cmp = compare_block_quotient(alg, b, ring);
      c.add("pf_graded", l, truncate(nilcone_dims_closed(p), p), cmp.block_dims, "closed_form");
      c.holds("pf_weights_vs_nilcone", l, cmp.ok());
      const auto& last = pf.back();
      c.add("pf_total", l, p2, last.dim(), "closed_form");
    }
  }

  const RepContext ctx(s.alg);
  switch (kind) {
    case Character::Kind::Zero: {
      std::size_t squares = 0;
      for (std::size_t k = 1; k <= p; ++k) squares += k * k;
      c.add("radical_dim", "", p3 - squares, ctx.radical().dim(), "closed_form");
      c.holds("radical_is_ideal", "", is_two_sided_ideal(alg, ctx.radical()));
      for (const auto& b : s.blocks) {
        const std::string l = c.label(b);
        const std::uint32_t w = *b.label.omega;
        const auto m = adjoint_module(alg, b);
        c.holds("adjoint_relations", l, !m.relation_failure());
        const auto tally = composition_tally(ctx, m);
        c.add("adjoint_tally", l, tally_to_string(*alg.field(), expected_adjoint_tally(p, w)),
              tally_to_string(*alg.field(), tally), "closed_form");
        c.add("adjoint_tally_dimension", l, b.dim(), tally_dimension(ctx, tally), "identity");
        const std::size_t trivial = w == 0 ? 1 : 3;
        c.add("hom_trivial_to_adjoint", l, trivial,
              hom_dim(simple_module(alg.field(), 0), m), "closed_form");
        c.add("adjoint_invariants", l, trivial, invariants_dim(m), "closed_form");
        if (w == 0) {
          const auto cert = projectivity_certificate(m);
          c.add("adjoint_jordan_type", l, std::vector<std::size_t>(p, p), cert.jordan_type,
                "closed_form");
        }
      }
      break;
    }
    case Character::Kind::NilpotentE: {
      c.add("radical_dim", "", p3 - (p + 1) / 2 * p2, ctx.radical().dim(), "closed_form");
      c.holds("radical_is_ideal", "", is_two_sided_ideal(alg, ctx.radical()));
      std::vector<std::size_t> layers;
      for (const auto& sm : ctx.simples()) layers.push_back(radical_series(ctx, sm.action).size());
      c.add("baby_vermas_simple", "", std::vector<std::size_t>(ctx.simples().size(), 1), layers,
            "closed_form");
      break;
    }
    case Character::Kind::Regular: {
      c.add("radical_dim", "", 0, ctx.radical().dim(), "closed_form");
      std::vector<std::size_t> identity(p2, 0);
      for (std::size_t i = 0; i < p; ++i) identity[i * p + i] = 1;
      c.add("baby_verma_hom_matrix", "", identity, hom_matrix(ctx.simples()), "closed_form");
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

Json to_json(const Report& report, bool with_timings) {
  Json out;
  out["command"] = report.command;
  out["request"] = report.request;
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json j;
    j["p"] = r.p;
    j["chi"] = r.chi;
    j["field"] = r.field;
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
      Json bj;
      bj["label"] = b.label;
      bj["alpha"] = b.alpha;
      bj["omega"] = b.omega ? Json(*b.omega) : Json(nullptr);
      bj["idempotent"] = b.idempotent;
      bj["dim"] = b.dim;
      bj["coinvariants_dim"] = b.coinvariants_dim;
      blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    Json tables = Json::array();
    for (std::size_t i = 0; i < r.tables.size(); ++i) {
      const auto& t = r.tables[i];
      Json tj;
      tj["block"] = r.table_labels[i];
      tj["kind"] = to_string(t.kind);
      tj["cumulative"] = t.cumulative;
      tj["graded"] = t.graded;
      tj["stabilization_degree"] = t.stabilization_degree;
      tables.push_back(std::move(tj));
    }
    j["tables"] = std::move(tables);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json cj;
      cj["name"] = c.name;
      cj["block"] = c.block.empty() ? Json(nullptr) : Json(c.block);
      cj["expected"] = c.expected;
      cj["computed"] = c.computed;
      cj["basis"] = c.basis;
      cj["pass"] = c.pass;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (with_timings && r.wall_ms) j["wall_ms"] = *r.wall_ms;
    results.push_back(std::move(j));
  }
  out["results"] = std::move(results);
  out["summary"] = {{"checks", report.checks()},
                    {"failed", report.failures()},
                    {"ok", report.ok()}};
  return out;
}

std::string render_json(const Report& report, bool with_timings) {
  return to_json(report, with_timings).dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string join_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_field(cells[i]);
  }
  return line + "\r\n";
}

}  // namespace

std::string render_csv(const Report& report, bool with_timings) {
  std::string out = join_row({"record", "p", "chi", "block", "name", "value", "expected", "pass", "basis"});
  for (const auto& r : report.results) {
    const std::string p = std::to_string(r.p);
    for (const auto& b : r.blocks) {
      out += join_row({"block", p, r.chi, b.label, "alpha", b.alpha, "", "", ""});
      out += join_row({"block", p, r.chi, b.label, "idempotent", b.idempotent, "", "", ""});
      out += join_row({"block", p, r.chi, b.label, "dim", std::to_string(b.dim), "", "", ""});
      out += join_row({"block", p, r.chi, b.label, "coinvariants_dim",
                       std::to_string(b.coinvariants_dim), "", "", ""});
    }
    for (std::size_t i = 0; i < r.tables.size(); ++i) {
      const auto& t = r.tables[i];
      out += join_row({"table", p, r.chi, r.table_labels[i], to_string(t.kind) + ".cumulative",
                       Json(t.cumulative).dump(), "", "", ""});
      out += join_row({"table", p, r.chi, r.table_labels[i], to_string(t.kind) + ".graded",
                       Json(t.graded).dump(), "", "", ""});
    }
    for (const auto& c : r.checks)
      out += join_row({"check", p, r.chi, c.block, c.name, scalar_text(c.computed),
                       scalar_text(c.expected), c.pass ? "true" : "false", c.basis});
    if (with_timings && r.wall_ms) {
      std::ostringstream ms;
      ms << *r.wall_ms;
      out += join_row({"timing", p, r.chi, "", "wall_ms", ms.str(), "", "", ""});
    }
  }
  return out;
}

std::string render_markdown(const Report& report, bool with_timings) {
  std::ostringstream os;
  os << "# " << report.command << "\n";
  for (const auto& r : report.results) {
    os << "\n## p = " << r.p << ", chi = " << r.chi << " over " << r.field << "\n";
    if (with_timings && r.wall_ms) os << "\nwall time: " << *r.wall_ms << " ms\n";
    if (!r.blocks.empty()) {
      os << "\n| block | alpha | dim | coinvariants | idempotent |\n|---|---|---|---|---|\n";
      for (const auto& b : r.blocks)
        os << "| " << b.label << " | " << b.alpha << " | " << b.dim << " | " << b.coinvariants_dim
           << " | " << b.idempotent << " |\n";
    }
    if (!r.tables.empty()) {
      const std::size_t len = r.tables.front().cumulative.size();
      os << "\n| i |";
      for (std::size_t i = 0; i < len; ++i) os << ' ' << i << " |";
      os << "\n|---|";
      for (std::size_t i = 0; i < len; ++i) os << "---|";
      os << '\n';
      for (std::size_t t = 0; t < r.tables.size(); ++t) {
        os << "| " << to_string(r.tables[t].kind) << ' ' << r.table_labels[t] << " |";
        for (auto d : r.tables[t].cumulative) os << ' ' << d << " |";
        os << '\n';
      }
    }
    if (!r.checks.empty()) {
      os << "\n| check | block | expected | computed | result |\n|---|---|---|---|---|\n";
      for (const auto& c : r.checks)
        os << "| " << c.name << " | " << c.block << " | " << scalar_text(c.expected) << " | "
           << scalar_text(c.computed) << " | " << (c.pass ? "pass" : "FAIL") << " |\n";
    }
  }
  os << "\n" << report.checks() << " checks, " << report.failures() << " failed\n";
  return os.str();
}

}  // namespace usl2
