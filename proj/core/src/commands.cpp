#include "cliffq/commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "cliffq/brauer_severi.hpp"
#include "cliffq/catalog.hpp"
#include "cliffq/clifford.hpp"
#include "cliffq/document.hpp"
#include "cliffq/errors.hpp"
#include "cliffq/invariants.hpp"
#include "cliffq/parallel.hpp"
#include "json_io.hpp"

namespace cliffq {

namespace {

using detail::json;
using detail::to_json;

using UsageError = TaggedError<"UsageError", ErrorCategory::InvalidInput>;

struct Outcome {
  json payload;
  std::string summary;
};

InputDocument load(const CommandOptions& opt, const std::optional<std::string>& input) {
  if (!input) throw UsageError("this command needs an input document");
  InputDocument doc = parse_document(*input);
  if (opt.prime && !(doc.field.is_prime() && doc.field.characteristic() == *opt.prime)) {
    if (doc.field.is_prime()) {
      throw UsageError("--prime " + std::to_string(*opt.prime) + " on a document over " + doc.field.name() +
                       "; only rational documents can be reduced");
    }
    const Field target = Field::prime(*opt.prime);
    if (doc.form) doc.form = doc.form->change_field(target);
    if (doc.net) doc.net = QuadricNet(doc.net->matrix().change_field(target));
    doc.field = target;
  }
  return doc;
}

const QForm& need_form(const InputDocument& doc, std::string_view command) {
  if (!doc.form) throw InvalidDocument(std::string(command) + " needs a form document");
  return *doc.form;
}

FiberPoint need_point(const CommandOptions& opt, Field field) {
  if (!opt.point) throw UsageError("--point x:y:z is required");
  return parse_point(*opt.point, field);
}

DelPezzoTag need_type(const CommandOptions& opt) {
  if (!opt.type) throw UsageError("--type is required");
  return parse_tag(*opt.type);
}

json bundle_json(const BundleDescriptor& b) { return b.to_string(); }

ScalarMatrix fiber_matrix(const InputDocument& doc, const FiberPoint& p) {
  if (doc.form) return evaluate_at(*doc.form, p);
  return make_f25plus(*doc.net).form_at(p);
}

json fiber_json(const ScalarMatrix& m) {
  const auto r = rank(m);
  const FiberAlgebra alg = fiber_algebra(m);
  const AlgebraType t = classify(alg);
  if (t != algebra_type_of_rank(r) || fiber_conic_type(m) != conic_type_of_rank(r)) {
    throw InternalError("rank " + std::to_string(r) + " but algebra type " + std::to_string(static_cast<int>(t)));
  }
  json j{{"matrix", to_json(m)},
         {"rank", r},
         {"conic_type", to_string(conic_type_of_rank(r))},
         {"algebra_type", static_cast<int>(t)},
         {"algebra_name", to_string(t)},
         {"azumaya", r == 3}};
  if (m.field().is_prime()) {
    j["conic_points"] = conic_point_count(m);
    j["expected_conic_points"] = expected_conic_point_count(m);
  }
  return j;
}

// ----------------------------------------------------------- commands

Outcome cmd_validate(const CommandOptions& opt, const std::optional<std::string>& input) {
  const InputDocument doc = load(opt, input);
  json j{{"field", doc.field.name()}};
  if (doc.net) {
    const Poly det5 = determinant(doc.net->matrix());
    j["kind"] = "net";
    j["det5_degree"] = det5.degree() ? json(*det5.degree()) : json(nullptr);
    return {j, "valid net over " + doc.field.name()};
  }
  const QForm& q = *doc.form;
  const Poly disc = discriminant(q);
  j["kind"] = "form";
  j["a"] = q.pattern().a;
  j["d"] = q.pattern().d;
  j["expected_discriminant_degree"] = q.pattern().discriminant_degree();
  j["discriminant_degree"] = disc.degree() ? json(*disc.degree()) : json(nullptr);
  const NowhereZeroResult nz = doc.field.is_prime() ? is_nowhere_zero(q, opt.workers)
                                                    : sample_nowhere_zero(q, 200, opt.seed);
  const char* verdict = nz.verdict == Verdict::Holds ? "Holds" : nz.verdict == Verdict::Fails ? "Fails" : "Inconclusive";
  j["nowhere_zero"] = {{"verdict", verdict}, {"points_checked", nz.points_checked}};
  if (nz.witness) j["nowhere_zero"]["witness"] = nz.witness->to_string();
  return {j, "valid form over " + doc.field.name() + ", nowhere zero: " + verdict};
}

Outcome cmd_normalize(const CommandOptions& opt, const std::optional<std::string>& input) {
  const InputDocument doc = load(opt, input);
  const QForm& q = need_form(doc, "normalize");
  const int m = normalizing_twist(q.pattern());
  const QForm n = twist(q, m);
  InputDocument out{doc.field, n, std::nullopt};
  return {json{{"twist", m}, {"a", n.pattern().a}, {"d", n.pattern().d}, {"document", to_json(out)}},
          "twist by " + std::to_string(m) + ": d = " + std::to_string(n.pattern().d)};
}

Outcome cmd_disc(const CommandOptions& opt, const std::optional<std::string>& input) {
  const InputDocument doc = load(opt, input);
  const Poly disc = doc.form ? discriminant(*doc.form) : determinant(doc.net->matrix());
  const int expected = doc.form ? doc.form->pattern().discriminant_degree() : 5;
  json j{{"discriminant", disc.to_string()},
         {"degree", disc.degree() ? json(*disc.degree()) : json(nullptr)},
         {"expected_degree", expected}};
  return {j, "discriminant " + disc.to_string()};
}

Outcome cmd_fiber(const CommandOptions& opt, const std::optional<std::string>& input) {
  const InputDocument doc = load(opt, input);
  const FiberPoint p = need_point(opt, doc.field);
  json j = fiber_json(fiber_matrix(doc, p));
  j["point"] = p.to_string();
  if (doc.form && azumaya_at(*doc.form, p) != j["azumaya"].get<bool>()) {
    throw InternalError("Azumaya test disagrees with the fiber rank");
  }
  return {j, "fiber at " + p.to_string() + ": " + j["conic_type"].get<std::string>()};
}

Outcome cmd_classify(const CommandOptions& opt, const std::optional<std::string>& input) {
  const InputDocument doc = load(opt, input);
  const FiberPoint p = need_point(opt, doc.field);
  const AlgebraType t = classify(fiber_algebra(fiber_matrix(doc, p)));
  return {json{{"point", p.to_string()}, {"algebra_type", static_cast<int>(t)}, {"algebra_name", to_string(t)}},
          std::string("type ") + std::to_string(static_cast<int>(t)) + " (" + to_string(t) + ")"};
}

json identities_json(const std::vector<NamedMinor>& named) {
  json out = json::array();
  for (const auto& n : named) {
    out.push_back({{"row", n.row}, {"col", n.col}, {"claim", n.label}, {"holds", n.holds},
                   {"minor", n.actual.to_string()}});
  }
  return out;
}

Outcome cmd_bsv_verify(const CommandOptions& opt, const std::optional<std::string>& input) {
  ConicFamily family = ConicFamily::universal(opt.prime ? Field::prime(*opt.prime) : Field::rationals());
  if (!opt.symbolic) {
    const InputDocument doc = load(opt, input);
    family = ConicFamily::from_form(need_form(doc, "bsv-verify"));
  }
  const MinorReport r = verify_minors(family, opt.workers);
  json minors = json::array();
  for (const auto& m : r.minors) {
    minors.push_back({{"row", m.row}, {"col", m.col}, {"minor", m.minor.to_string()},
                      {"quotient", m.quotient.to_string()}});
  }
  json j{{"symbolic", opt.symbolic},
         {"conic", r.conic.poly.to_string()},
         {"matrix", to_json(r.matrix)},
         {"minors", minors},
         {"all_divisible", r.all_divisible},
         {"identities", identities_json(r.named)},
         {"identities_hold", r.named_hold},
         {"alternate_labels", identities_json(swapped_label_claims(r))}};
  return {j, std::string("16 minors divisible by q: ") + (r.all_divisible ? "yes" : "no") +
                 ", identities hold: " + (r.named_hold ? "yes" : "no")};
}

Outcome cmd_trace_pairing(const CommandOptions& opt, const std::optional<std::string>& input) {
  const InputDocument doc = load(opt, input);
  const QForm& q = need_form(doc, "trace-pairing");
  const PolyMatrix p = trace_pairing_global(q);
  const bool agrees = p == -adjugate3(q.entries());
  if (!agrees) throw InternalError("trace pairing differs from -Adj Q");
  return {json{{"pairing", to_json(p)}, {"equals_minus_adjugate", agrees}}, "trace pairing = -Adj Q"};
}

Outcome cmd_recover(const CommandOptions& opt, const std::optional<std::string>& input) {
  const InputDocument doc = load(opt, input);
  const QForm& q = need_form(doc, "recover");
  const PolyMatrix p = trace_pairing_global(q);
  const PolyMatrix back = recover_form(p);
  int sign = 0;
  if (back == q.entries()) {
    sign = 1;
  } else if (back == -q.entries()) {
    sign = -1;
  } else {
    throw InternalError("recovered matrix is not +-Q");
  }
  return {json{{"pairing", to_json(p)}, {"recovered", to_json(back)}, {"sign", sign}, {"round_trip", true}},
          std::string("recovered ") + (sign > 0 ? "+Q" : "-Q")};
}

Outcome cmd_invariants(const CommandOptions& opt, const std::optional<std::string>&) {
  const DelPezzoTag tag = need_type(opt);
  const InvariantReport r = report(tag);
  const auto& type = delpezzo_type(tag);
  json j{{"type", to_string(tag)},
         {"vstar", bundle_json(r.vstar)},
         {"d", r.d},
         {"chi_AO", r.chi_AO},
         {"c1", r.c1},
         {"c2", r.c2},
         {"minus_K3", r.minus_K3},
         {"minus_K3_euler", r.minus_K3_euler},
         {"minus_K3_chern", r.minus_K3_chern},
         {"minus_K3_chern_coefficient_one", r.minus_K3_chern_printed},
         {"h12", r.h12},
         {"bs_description", type.bs_description},
         {"resolution", {{"source", bundle_json(type.resolution.source)},
                         {"target", bundle_json(type.resolution.target)}}}};
  return {j, std::string(to_string(tag)) + ": -K^3 = " + std::to_string(r.minus_K3) + ", h12 = " +
                 std::to_string(r.h12)};
}

Outcome cmd_catalog(const CommandOptions& opt, const std::optional<std::string>&) {
  const DelPezzoTag tag = need_type(opt);
  const Field field = Field::prime(opt.prime.value_or(101));
  InputDocument doc{field, std::nullopt, std::nullopt};
  if (tag == DelPezzoTag::F25plus) {
    doc.net = random_net(opt.seed, field);
  } else {
    doc.form = make_type(tag, opt.seed, field);
  }
  return {json{{"type", to_string(tag)}, {"seed", opt.seed}, {"document", to_json(doc)}},
          std::string(to_string(tag)) + " document over " + field.name()};
}

Outcome cmd_hilbert(const CommandOptions& opt, const std::optional<std::string>& input) {
  DegreePattern pattern;
  if (opt.type) {
    pattern = pattern_of(parse_tag(*opt.type));
  } else {
    pattern = need_form(load(opt, input), "hilbert").pattern();
  }
  if (opt.order > 10000) throw UsageError("--order at most 10000");
  const RationalSeries s = gamma_hilbert_series(pattern);
  const auto coeffs = series_expand(s, opt.order);
  json cj = json::array();
  for (const auto& c : coeffs) cj.push_back(c.get_str());
  json num = json::array(), den = json::array();
  for (const auto& c : s.numerator) num.push_back(c.get_str());
  for (const auto& c : s.denominator) den.push_back(c.get_str());
  return {json{{"a", pattern.a}, {"d", pattern.d}, {"series", s.to_string()}, {"numerator", num},
               {"denominator", den}, {"coefficients", cj}},
          "Hilbert series " + s.to_string()};
}

Outcome cmd_scan(const CommandOptions& opt, const std::optional<std::string>& input) {
  const InputDocument doc = load(opt, input);
  if (!doc.field.is_prime()) throw UsageError("scan needs --prime p or a document over F_p");
  const auto points = projective_plane(doc.field);
  std::optional<F25PlusProvider> provider;
  if (doc.net) provider.emplace(*doc.net);
  struct Tally {
    std::array<std::size_t, 4> conic{};
    std::array<std::size_t, 5> algebra{};
    std::size_t on_discriminant = 0;
  };
  const Poly disc = doc.form ? discriminant(*doc.form) : provider->det5();
  auto tallies = parallel_chunks(points.size(), opt.workers, [&](std::size_t b, std::size_t e) {
    Tally t;
    for (std::size_t i = b; i < e; ++i) {
      const ScalarMatrix m = doc.form ? evaluate_at(*doc.form, points[i]) : provider->form_at(points[i]);
      const auto r = rank(m);
      const AlgebraType at = classify(fiber_algebra(m));
      if (at != algebra_type_of_rank(r)) {
        throw InternalError("classification disagrees with rank at " + points[i].to_string());
      }
      const bool on_disc = disc.evaluate(points[i].coordinates()).is_zero();
      if (on_disc != (r < 3)) {
        throw InternalError("discriminant and rank disagree at " + points[i].to_string());
      }
      ++t.conic[static_cast<std::size_t>(conic_type_of_rank(r))];
      ++t.algebra[static_cast<std::size_t>(at) - 1];
      if (on_disc) ++t.on_discriminant;
    }
    return t;
  });
  Tally total;
  for (const auto& t : tallies) {
    for (std::size_t k = 0; k < 4; ++k) total.conic[k] += t.conic[k];
    for (std::size_t k = 0; k < 5; ++k) total.algebra[k] += t.algebra[k];
    total.on_discriminant += t.on_discriminant;
  }
  json census, algebra;
  for (auto c : {ConicType::SmoothConic, ConicType::LinePair, ConicType::DoubleLine, ConicType::WholePlane}) {
    census[to_string(c)] = total.conic[static_cast<std::size_t>(c)];
  }
  for (std::size_t k = 0; k < 5; ++k) algebra[std::to_string(k + 1)] = total.algebra[k];
  return {json{{"field", doc.field.name()}, {"points", points.size()}, {"census", census},
               {"algebra_types", algebra}, {"discriminant_points", total.on_discriminant}},
          "scanned " + std::to_string(points.size()) + " points of P^2(" + doc.field.name() + ")"};
}

using Handler = std::function<Outcome(const CommandOptions&, const std::optional<std::string>&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> h{
      {"validate", cmd_validate},     {"normalize", cmd_normalize},
      {"disc", cmd_disc},             {"fiber", cmd_fiber},
      {"classify", cmd_classify},     {"bsv-verify", cmd_bsv_verify},
      {"trace-pairing", cmd_trace_pairing}, {"recover", cmd_recover},
      {"invariants", cmd_invariants}, {"catalog", cmd_catalog},
      {"hilbert", cmd_hilbert},       {"scan", cmd_scan}};
  return h;
}

const char* category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::InvalidInput: return "invalid_input";
    case ErrorCategory::MathematicalFailure: return "mathematical_failure";
    case ErrorCategory::InternalInvariant: return "internal_invariant";
  }
  return "?";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run(std::string_view command, const CommandOptions& options,
                  const std::optional<std::string>& input_text) {
  const auto start = std::chrono::steady_clock::now();
  json report{{"command", std::string(command)}};
  CommandResult result;
  try {
    const auto it = handlers().find(command);
    if (it == handlers().end()) throw UsageError("unknown command '" + std::string(command) + "'");
    Outcome out = it->second(options, input_text);
    report["status"] = "ok";
    report["payload"] = std::move(out.payload);
    result.summary = std::string(command) + ": " + out.summary;
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = {{"kind", e.kind()}, {"category", category_name(e.category())}, {"message", e.what()}};
    result.exit_code = static_cast<int>(e.category());
    result.summary = std::string(command) + ": " + e.kind() + ": " + e.what();
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "InternalError"}, {"category", "internal_invariant"}, {"message", e.what()}};
    result.exit_code = 3;
    result.summary = std::string(command) + ": internal error: " + e.what();
  }
  if (options.timing) {
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  result.report = report.dump(2) + "\n";
  return result;
}

unsigned workers_from_env(const char* value) {
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (value == nullptr || *value == '\0') return hw;
  const std::string text(value);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6 || std::stoul(text) == 0) {
    throw UsageError("CLIFFORD_THREADS must be a positive integer, got '" + text + "'");
  }
  return std::min<unsigned>(hw, static_cast<unsigned>(std::stoul(text)));
}

}  // namespace cliffq
