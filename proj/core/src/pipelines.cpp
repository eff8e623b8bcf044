#include "liaison/pipelines.hpp"

#include <algorithm>
#include <chrono>

#include "liaison/geometry.hpp"
#include "liaison/linear_systems.hpp"

namespace liaison {

std::string_view pipeline_name(PipelineId id) {
  switch (id) {
    case PipelineId::kH10_8:
      return "h10_8";
    case PipelineId::kM10_n:
      return "m10_n";
    case PipelineId::kH13_7:
      return "h13_7";
    case PipelineId::kH12_8:
      return "h12_8";
  }
  return "?";
}

std::optional<PipelineId> parse_pipeline(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '-', '_');
  for (auto id : {PipelineId::kH10_8, PipelineId::kM10_n, PipelineId::kH13_7, PipelineId::kH12_8}) {
    if (s == pipeline_name(id)) return id;
  }
  return std::nullopt;
}

bool Certificate::pass() const {
  if (aborted || checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::uint64_t derived_seed(std::uint64_t seed, int attempt) {
  if (attempt == 0) return seed;
  return Rng::mix(seed ^ Rng::mix(0x7265747279ull + static_cast<std::uint64_t>(attempt)));
}

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  explicit Recorder(Certificate& cert) : cert_(cert), mark_(Clock::now()) {}

  bool check(std::string name, CheckValue expected, CheckValue computed, std::string relation = "==") {
    bool ok = false;
    if (relation == ">=") {
      ok = std::holds_alternative<long long>(expected) && std::holds_alternative<long long>(computed) &&
           std::get<long long>(computed) >= std::get<long long>(expected);
    } else {
      ok = expected == computed;
    }
    cert_.checks.push_back({std::move(name), std::move(relation), std::move(expected), std::move(computed), ok});
    return ok;
  }

  void ideal(std::string name, const Ideal& I) { cert_.ideals.emplace_back(std::move(name), I); }
  void meta(std::string key, CheckValue v) { cert_.metadata.emplace_back(std::move(key), std::move(v)); }

  void stage(std::string name) {
    const auto now = Clock::now();
    cert_.timings.emplace_back(std::move(name), std::chrono::duration<double>(now - mark_).count());
    mark_ = now;
  }

  Certificate& cert() { return cert_; }

 private:
  Certificate& cert_;
  Clock::time_point mark_;
};

std::vector<long long> curve_value(const CurveInvariants& c) {
  std::vector<long long> v(c.degree.begin(), c.degree.end());
  v.push_back(c.genus);
  return v;
}

std::vector<long long> curve_value(const Ideal& I) {
  if (scheme_dimension(I) != 1) return {};
  return curve_value(curve_invariants(I));
}

long long encode_lambda(const std::pair<Coeff, Coeff>& l, const PrimeField& F) {
  // (s:1) -> s, (1:0) -> p.
  return l.second == 0 ? static_cast<long long>(F.p()) : static_cast<long long>(F.div(l.first, l.second));
}

void record_link(Recorder& rec, const std::string& name, const LinkResult& L, std::vector<long long> expected) {
  rec.check(name + ".predicted", expected, curve_value(L.step.predicted));
  rec.check(name + ".residual", std::move(expected),
            L.step.computed ? curve_value(*L.step.computed) : std::vector<long long>{});
}

// Length of C ∩ C' as a scheme against the closed form evaluated on each curve.
void record_intersection(Recorder& rec, const std::string& name, const Ideal& c, const Ideal& c2, const LinkResult& L,
                         long long expected, Rng& rng) {
  rec.check(name + ".formula_on_first", expected, linked_intersection_length(L.step.input, L.step.degrees));
  rec.check(name + ".formula_on_second", expected,
            L.step.computed ? linked_intersection_length(*L.step.computed, L.step.degrees) : -1LL);
  NodalLocusReport rep = transverse_nodal_intersection(c, c2, expected, rng);
  rec.check(name + ".length", expected, rep.zero_dimensional ? rep.length : -1LL);
  rec.check(name + ".reduced", true, rep.reduced);
}

void record_involution(Recorder& rec, const std::string& name, const LinkResult& L, const Ideal& original, Rng& rng) {
  Ideal back = residual_ideal(L.complete_intersection, L.residual, rng);
  rec.check(name + ".involution", true, back == original);
}

void record_max_rank(Recorder& rec, const std::string& name, const Ideal& I, int b, int a_last) {
  MaxRankReport rep = maximal_rank_check(I, b, 1, a_last);
  std::vector<long long> expected, computed;
  for (const auto& row : rep.rows) {
    expected.push_back(row.expected);
    computed.push_back(row.h0);
  }
  rec.check(name, std::move(expected), std::move(computed));
}

std::vector<Polynomial> forms_containing(const Ideal& I, std::vector<Multidegree> degrees, Rng& rng, Recorder& rec) {
  return random_hypersurfaces_containing(I, degrees, rng, &rec.cert().resamples);
}

std::vector<Ideal> distinct_fiber_lines(const RingPtr& R, int n, Rng& rng, Recorder& rec,
                                        std::vector<std::pair<Coeff, Coeff>>& lambdas) {
  std::vector<Ideal> lines;
  int attempt = 0;
  while (static_cast<int>(lines.size()) < n) {
    FiberLine l = random_fiber_line(R, rng);
    if (std::find(lambdas.begin(), lambdas.end(), l.lambda) != lambdas.end()) {
      rec.cert().resamples.push_back({"random_fiber_line", ++attempt, "repeated fiber"});
      if (attempt > kMaxResamples) throw Error(ErrorCode::kDegenerateSample, "no distinct fibers in 20 tries");
      continue;
    }
    lambdas.push_back(l.lambda);
    lines.push_back(std::move(l.ideal));
  }
  return lines;
}

PrimeField checked_field(std::uint64_t prime) {
  if (prime < kMinPrime || prime > kMaxPrime || !is_prime(prime)) {
    throw Error(ErrorCode::kInvalidArgument, "prime must be a prime in [1009, 2^20], got " + std::to_string(prime));
  }
  return PrimeField(prime);
}

// ---------------------------------------------------------------------------

void run_h10_8(const PipelineOptions& o, Rng& rng, Recorder& rec) {
  const PrimeField F = checked_field(o.prime);
  RingPtr R = Ring::p1xp2(F);
  rec.meta("parameters", 44LL);
  rec.meta("extension_cap", static_cast<long long>(o.extension_cap));

  // C'' = R ∪ 5 lines.
  Ideal rational = random_ci_rational_curve(R, rng, &rec.cert().resamples);
  std::vector<std::pair<Coeff, Coeff>> lambdas;
  std::vector<Ideal> parts{rational};
  for (auto& l : distinct_fiber_lines(R, 5, rng, rec, lambdas)) parts.push_back(std::move(l));
  Ideal c2 = union_ideal(R, parts);
  rec.ideal("R", rational);
  rec.ideal("C''", c2);
  rec.check("C''.invariants", std::vector<long long>{1, 9, -5}, curve_value(c2));
  rec.check("h0(I_C''(5,2))", 7LL, h0_ideal(c2, {5, 2}));
  rec.stage("C''");

  // C' = residual of C'' in two (5,2) forms.
  LinkResult l1 = link(c2, forms_containing(c2, {{5, 2}, {5, 2}}, rng, rec), rng);
  const Ideal& c1 = l1.residual;
  rec.ideal("Y'", l1.complete_intersection);
  rec.ideal("C'", c1);
  record_link(rec, "link1", l1, {3, 11, 4});
  rec.stage("link1");
  rec.check("h0(I_C'(5,2))", 2LL, h0_ideal(c1, {5, 2}));
  rec.check("C'.smooth", true, is_smooth_curve(c1, rng));
  record_intersection(rec, "C'∩C''", c1, c2, l1, 29, rng);
  record_max_rank(rec, "C'.max_rank(b,2)", c1, 2, 8);
  {
    NodalLocusReport nodes = nodal_plane_model_check(plane_model(c1), 4, rng);
    rec.check("C'.plane_model.delta", 41LL, nodes.zero_dimensional ? nodes.length : -1LL);
    rec.check("C'.plane_model.nodal", true, nodes.pass());
  }
  rec.stage("C' checks");
  {
    FiberScanReport scan = collinear_fiber_scan(c1, o.extension_cap, o.jobs);
    std::vector<long long> expected, computed;
    for (const auto& l : lambdas) expected.push_back(encode_lambda(l, F));
    for (const auto& pt : scan.collinear) {
      computed.push_back(pt.lambda ? encode_lambda(*pt.lambda, F) : -static_cast<long long>(pt.degree()));
    }
    std::sort(expected.begin(), expected.end());
    std::sort(computed.begin(), computed.end());
    rec.check("C'.collinear_fibers.count", 5LL, static_cast<long long>(scan.collinear.size()));
    rec.check("C'.collinear_fibers", std::move(expected), std::move(computed));
    rec.check("C'.degenerate_fibers", 0LL, static_cast<long long>(scan.degenerate.size()));
  }
  rec.stage("fiber scan");
  record_involution(rec, "link1", l1, c2, rng);
  rec.stage("involution1");

  // C = residual of C' in a (3,3) and a (4,3) form.
  rec.check("h0(I_C'(3,3))", 1LL, h0_ideal(c1, {3, 3}));
  rec.check("h0(I_C'(4,3))", 8LL, h0_ideal(c1, {4, 3}));
  LinkResult l2 = link(c1, forms_containing(c1, {{3, 3}, {4, 3}}, rng, rec), rng);
  const Ideal& c = l2.residual;
  rec.ideal("Y", l2.complete_intersection);
  rec.ideal("C", c);
  record_link(rec, "link2", l2, {6, 10, 10});
  rec.stage("link2");
  rec.check("C.smooth", true, is_smooth_curve(c, rng));
  record_intersection(rec, "C∩C'", c, c1, l2, 42, rng);
  record_max_rank(rec, "C.max_rank(a,3)", c, 3, 8);
  {
    std::vector<long long> table;
    for (int a = 1; a <= 4; ++a) table.push_back(h0_ideal(c, {a, 3}));
    rec.check("h0(I_C(a,3)), a=1..4", std::vector<long long>{0, 0, 1, 5}, std::move(table));
  }
  rec.check("C.nondegenerate", true, nondegeneracy_check(c));
  rec.stage("C checks");
  record_involution(rec, "link2", l2, c1, rng);
  rec.stage("involution2");
}

struct M10Outcome {
  Ideal curve;
  Polynomial plane_form;
  std::vector<std::vector<Coeff>> points;
};

M10Outcome run_m10(const PipelineOptions& o, int n, PointMode mode, Rng& rng, Recorder& rec) {
  const PrimeField F = checked_field(o.prime);
  RingPtr R = Ring::p1xp2(F);
  if (n < 0 || n > 5) throw Error(ErrorCode::kInvalidArgument, "m10_n takes 0..5 points");

  // C = graph of a rational plane quartic ∪ 3 lines.
  Ideal graph = random_plane_quartic_graph(R, rng, &rec.cert().resamples);
  std::vector<std::pair<Coeff, Coeff>> lambdas;
  std::vector<Ideal> parts{graph};
  for (auto& l : distinct_fiber_lines(R, 3, rng, rec, lambdas)) parts.push_back(std::move(l));
  Ideal c0 = union_ideal(R, parts);
  rec.ideal("C0", c0);
  rec.check("C0.invariants", std::vector<long long>{1, 7, -3}, curve_value(c0));
  rec.check("h0(I_C0(4,2))", 2LL, h0_ideal(c0, {4, 2}), ">=");
  rec.stage("C0");

  LinkResult l1 = link(c0, forms_containing(c0, {{4, 2}, {4, 2}}, rng, rec), rng);
  const Ideal& c1 = l1.residual;
  rec.ideal("C'", c1);
  record_link(rec, "link1", l1, {3, 9, 4});
  rec.check("C'.smooth", true, is_smooth_curve(c1, rng));
  rec.check("h0(I_C'(3,3))", 7LL, h0_ideal(c1, {3, 3}));
  record_intersection(rec, "C0∩C'", c0, c1, l1, 21, rng);
  record_involution(rec, "link1", l1, c0, rng);
  rec.stage("link1");

  // Two (3,3)-forms through C' and the ambient points.
  PointSet ambient{{}, Ideal::unit(R)};
  Ideal through = c1;
  if (mode == PointMode::kAmbient && n > 0) {
    ambient = random_points(R, n, rng);
    through = union_ideal(R, std::vector<Ideal>{c1, ambient.ideal});
    rec.check("h0(I_C'∩I_P(3,3))", static_cast<long long>(7 - n), h0_ideal(through, {3, 3}));
  }
  LinkResult l2 = link(c1, forms_containing(through, {{3, 3}, {3, 3}}, rng, rec), rng);
  const Ideal& c2 = l2.residual;
  rec.ideal("C''", c2);
  record_link(rec, "link2", l2, {6, 9, 10});
  rec.stage("link2");
  rec.check("C''.smooth", true, is_smooth_curve(c2, rng));
  record_intersection(rec, "C'∩C''", c1, c2, l2, 33, rng);
  Polynomial plane = plane_model(c2);
  {
    NodalLocusReport nodes = nodal_plane_model_check(plane, 10, rng);
    rec.check("C''.plane_model.delta", 18LL, nodes.zero_dimensional ? nodes.length : -1LL);
    rec.check("C''.plane_model.nodal", true, nodes.pass());
  }
  record_involution(rec, "link2", l2, c1, rng);
  rec.stage("C'' checks");

  std::vector<std::vector<Coeff>> points = ambient.points;
  if (mode == PointMode::kOnCurve && n > 0) {
    points = random_points_on_curve(c2, n, rng).points;
    rec.stage("points");
  }
  bool on = true;
  for (const auto& p : points) {
    for (const auto& g : c2.generators()) on = on && evaluate(g, p) == 0;
  }
  rec.check("C''.contains_points", true, on);
  rec.meta("points", static_cast<long long>(n));
  rec.meta("point_mode", std::string(mode == PointMode::kAmbient ? "ambient" : "on-curve"));
  return {c2, plane, std::move(points)};
}

// Marks k points of C'' on its plane model, embeds by |K - P| and links the
// image by hypersurfaces of degree `link_degree`.
struct SerreDualSpec {
  int marked;
  int space_dim;
  int link_degree;
  long long h0_link_degree;
  std::vector<long long> embedded;  // (d, g) of the embedded C'
  std::vector<long long> residual;  // (d, g) of the final curve
  long long intersection;
  long long quadrics_expected;      // lower bound for h0(I_C(2)); 0 to skip
  int target_gonality;
};

void run_serre_dual(const PipelineOptions& o, const SerreDualSpec& s, Rng& rng, Recorder& rec) {
  M10Outcome m = run_m10(o, s.marked, PointMode::kOnCurve, rng, rec);
  PlaneModel pm = make_plane_model(m.plane_form, 10, rng);
  std::vector<std::vector<Coeff>> plane_points;
  for (const auto& p : m.points) plane_points.push_back({p[2], p[3], p[4]});
  mark_points(pm, plane_points);
  rec.check("adjoints(k=0).dim", 10LL, static_cast<long long>(adjoint_series(pm, 0).size()));
  std::vector<Polynomial> series = adjoint_series(pm, s.marked);
  rec.check("adjoints(k=" + std::to_string(s.marked) + ").dim", static_cast<long long>(10 - s.marked),
            static_cast<long long>(series.size()));
  rec.stage("adjoints");

  Embedding emb = embed_by_series(pm, series, s.marked);
  const Ideal& c1 = emb.ideal;
  rec.ideal("C'_embedded", c1);
  rec.check("C'_embedded.invariants", s.embedded, curve_value(emb.invariants));
  rec.check("C'_embedded.nondegenerate", true, nondegeneracy_check(c1));
  const std::string h0name = "h0(I_C'(" + std::to_string(s.link_degree) + "))";
  rec.check(h0name, s.h0_link_degree, h0_ideal(c1, {s.link_degree}));
  rec.stage("embedding");

  const int codim = s.space_dim - 1;
  LinkResult l = link(c1, forms_containing(c1, std::vector<Multidegree>(codim, Multidegree{s.link_degree}), rng, rec), rng);
  const Ideal& c = l.residual;
  rec.ideal("C", c);
  record_link(rec, "link3", l, s.residual);
  rec.stage("link3");
  rec.check("C.smooth", true, is_smooth_curve(c, rng));
  record_intersection(rec, "C∩C'", c, c1, l, s.intersection, rng);
  rec.check("C.nondegenerate", true, nondegeneracy_check(c));
  if (s.quadrics_expected > 0) rec.check("h0(I_C(2))", s.quadrics_expected, h0_ideal(c, {2}), ">=");
  record_involution(rec, "link3", l, c1, rng);
  {
    const auto [d, r] = serre_residual(static_cast<int>(s.residual[1]), static_cast<int>(s.residual[0]), s.space_dim);
    rec.check("serre_residual", std::vector<long long>{s.target_gonality, 1}, std::vector<long long>{d, r});
  }
  rec.stage("C checks");
}

void run_once(PipelineId id, const PipelineOptions& o, Rng& rng, Recorder& rec) {
  switch (id) {
    case PipelineId::kH10_8:
      run_h10_8(o, rng, rec);
      return;
    case PipelineId::kM10_n:
      run_m10(o, o.points, o.point_mode, rng, rec);
      return;
    case PipelineId::kH13_7:
      run_serre_dual(o, {3, 6, 2, 7, {15, 10}, {17, 13}, 27, 6, 7}, rng, rec);
      return;
    case PipelineId::kH12_8:
      run_serre_dual(o, {5, 4, 3, 5, {13, 10}, {14, 12}, 34, 0, 8}, rng, rec);
      return;
  }
}

bool retryable(ErrorCode c) {
  return c == ErrorCode::kDegenerateSample || c == ErrorCode::kPointScarcity || c == ErrorCode::kSpecialPosition ||
         c == ErrorCode::kNotEmbedding;
}

}  // namespace

Certificate run_pipeline(PipelineId id, const PipelineOptions& o) {
  checked_field(o.prime);
  ResampleLog earlier;
  for (int attempt = 0; attempt < o.max_attempts; ++attempt) {
    Certificate cert;
    cert.pipeline = id;
    cert.prime = o.prime;
    cert.seed = o.seed;
    cert.attempt = attempt;
    cert.effective_seed = derived_seed(o.seed, attempt);
    cert.resamples = earlier;
    Rng rng(cert.effective_seed);
    rng.record(o.record_choices);
    Recorder rec(cert);
    try {
      run_once(id, o, rng, rec);
    } catch (const Error& e) {
      if (retryable(e.code())) {
        earlier = cert.resamples;
        earlier.push_back({"pipeline", attempt + 1, e.what()});
        continue;
      }
      cert.aborted = e.what();
    }
    cert.choices = rng.log();
    return cert;
  }
  throw Error(ErrorCode::kDegenerateSample,
              "degenerate samples in all " + std::to_string(o.max_attempts) + " attempts of " +
                  std::string(pipeline_name(id)));
}

Certificate pipeline_h10_8(std::uint64_t prime, std::uint64_t seed) {
  PipelineOptions o;
  o.prime = prime;
  o.seed = seed;
  return run_pipeline(PipelineId::kH10_8, o);
}

Certificate pipeline_m10_n(std::uint64_t prime, std::uint64_t seed, int n, PointMode mode) {
  PipelineOptions o;
  o.prime = prime;
  o.seed = seed;
  o.points = n;
  o.point_mode = mode;
  return run_pipeline(PipelineId::kM10_n, o);
}

Certificate pipeline_h13_7(std::uint64_t prime, std::uint64_t seed) {
  PipelineOptions o;
  o.prime = prime;
  o.seed = seed;
  return run_pipeline(PipelineId::kH13_7, o);
}

Certificate pipeline_h12_8(std::uint64_t prime, std::uint64_t seed) {
  PipelineOptions o;
  o.prime = prime;
  o.seed = seed;
  return run_pipeline(PipelineId::kH12_8, o);
}

}  // namespace liaison
