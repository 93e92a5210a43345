// Command-line front end: JSON payload on stdin, JSON result on stdout.
// Exit status 0 on success, 1 on a domain error, 2 on malformed input.

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cendn/json_io.hpp"
#include "cendn/render.hpp"
#include "cendn/verify.hpp"

namespace {

using cendn::json::Json;
using cendn::json::MalformedInput;
namespace cj = cendn::json;

struct Flags {
  int n = 0;
  std::uint64_t seed = 42;
  int degBound = 4;
  int iterBound = -1;
  std::string suite = "all";
  bool render = false;
  bool circ = false;
  bool inverse = false;
  bool compose = false;
  bool corrupt = false;
  std::vector<int> sizes{1, 2};
  int cases = 4;
  std::string side = "left";
};

Json read_payload() {
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return Json::object();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("payload is not JSON: ") + e.what());
  }
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw MalformedInput(std::string("payload needs \"") + key + "\"");
  return j[key];
}

template <typename T>
std::string render_matrix(const cendn::Matrix<T>& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? ", " : "") << cendn::render(m(i, j));
    out << "]\n";
  }
  return out.str();
}

// Output: rendered text when asked and available, canonical JSON otherwise.
struct Result {
  Json json;
  std::string text;
};

template <typename T>
Result matrix_result(const cendn::Matrix<T>& m, Json j) {
  return {std::move(j), render_matrix(m)};
}

cendn::SubalgebraPresentation presentation(const Json& p, const Flags& f) {
  auto pres = cj::decode_presentation(p);
  if (f.iterBound > 0) pres.iterBound = f.iterBound;
  return pres;
}

Result dispatch(const std::string& cmd, const Flags& f, const Json& p) {
  using namespace cendn;
  if (cmd == "nproduct") {
    const auto a = cj::decode_element(need(p, "a")), b = cj::decode_element(need(p, "b"));
    const auto r = f.circ ? nproduct_circ(a, f.n, b) : nproduct(a, f.n, b);
    return matrix_result(r, cj::encode(r));
  }
  if (cmd == "locality") {
    const auto a = cj::decode_element(need(p, "a")), b = cj::decode_element(need(p, "b"));
    return {Json{{"locality", locality(a, b)}}, {}};
  }
  if (cmd == "bracket") {
    const auto a = cj::decode_element(need(p, "a")), b = cj::decode_element(need(p, "b"));
    const auto r = bracket(a, f.n, b);
    return matrix_result(r, cj::encode(r));
  }
  if (cmd == "phi") {
    const auto a = cj::decode_element(need(p, "a"));
    const auto r = f.inverse ? phi_inv(a) : phi(a);
    return matrix_result(r, cj::encode(r));
  }
  if (cmd == "sigma") {
    const auto a = cj::decode_element(need(p, "a"));
    const auto r = sigma(a);
    return matrix_result(r, cj::encode(r));
  }
  if (cmd == "symbol") {
    const auto r = symbol(cj::decode_element(need(p, "a")), f.n);
    return matrix_result(r, cj::encode(r));
  }
  if (cmd == "act") {
    const auto w = cj::decode_weyl_operator(need(p, "w"));
    const auto r = act(w, cj::decode_element(need(p, "b")));
    return matrix_result(r, cj::encode(r));
  }
  if (cmd == "reconstruct") {
    const auto seq = cj::decode_sequence(p);
    std::size_t N = seq.coeffs.empty() ? 0 : seq.coeffs.front().size();
    if (p.contains("N")) N = static_cast<std::size_t>(cj::decode_int(p["N"], "N"));
    if (N < 1) throw MalformedInput("empty sequence needs \"N\"");
    const auto r = reconstruct(seq, N);
    return matrix_result(r, cj::encode(r));
  }
  if (cmd == "fit-seq") {
    std::vector<OperatorSample> samples;
    const auto& list = need(p, "samples");
    if (!list.is_array()) throw MalformedInput("samples must be a list");
    for (const auto& s : list) samples.push_back(cj::decode_sample(s));
    return {cj::encode(fit_differential_sequence(samples)), {}};
  }
  if (cmd == "smith") {
    const auto Q = cj::decode_polymatrix<Var::v>(need(p, "Q"));
    const auto c = canonicalize_Q(Q);
    Json out = cj::encode(c.smith);
    out["witness"] = cj::encode(c.witness);
    out["verified"] = c.verified;
    if (is_unimodular(Q)) out["inverse"] = cj::encode(unimodular_inverse(Q));
    return {out, {}};
  }
  if (cmd == "autom") {
    if (f.compose) {
      const auto t1 = cj::decode_autom(need(p, "t1")), t2 = cj::decode_autom(need(p, "t2"));
      return {cj::encode(compose(t1, t2)), {}};
    }
    const auto t = cj::decode_autom(need(p, "t"));
    if (f.inverse) return {cj::encode(inverse(t)), {}};
    const auto r = apply_autom(cj::decode_element(need(p, "a")), t);
    return matrix_result(r, cj::encode(r));
  }
  if (cmd == "autom-weyl") {
    const auto t = cj::decode_autom(need(p, "t"));
    const auto r = apply_autom_weyl(cj::decode_weyl_operator(need(p, "w")), t);
    return matrix_result(r, cj::encode(r));
  }
  if (cmd == "ideal-member") {
    const auto Q = cj::decode_polymatrix<Var::v>(need(p, "Q"));
    Json out;
    ConformalElement x = p.contains("x") ? cj::decode_element(p["x"]) : e_nq(Q.size(), Q);
    if (!p.contains("x")) out["element"] = cj::encode(x);
    if (f.side == "left")
      out["member"] = left_ideal_member(x, Q);
    else if (f.side == "right")
      out["member"] = right_ideal_member(x, Q);
    else
      throw MalformedInput("side must be left or right");
    return {out, {}};
  }
  if (cmd == "hseq") {
    const auto h = cj::decode_unipoly<Var::p>(need(p, "h"));
    if (f.n < 0) throw MalformedInput("--n must be non-negative");
    Json out = cj::encode(h_sequences(h, f.n));
    out["identities"] = cj::encode(verify_h_identities(h, f.n));
    if (p.contains("A")) {
      std::vector<PolyMatrix<Var::p>> A;
      for (const auto& m : p["A"]) A.push_back(cj::decode_polymatrix<Var::p>(m));
      Json B = Json::array();
      for (const auto& m : rebase_coefficients(A, h)) B.push_back(cj::encode(m));
      out["B"] = B;
    }
    return {out, {}};
  }
  if (cmd == "verify") {
    VerifyOptions o;
    o.seed = f.seed;
    o.suite = f.suite;
    o.sizes = f.sizes;
    o.cases = f.cases;
    o.corrupt = f.corrupt;
    const auto rep = verify_suite(o);
    Json out = cj::encode(rep);
    out["seed"] = f.seed;
    out["suite"] = f.suite;
    out["sizes"] = f.sizes;
    return {out, {}};
  }
  if (cmd == "classify") {
    return {cj::encode(classify_irreducible(presentation(p, f), f.degBound, f.n)), {}};
  }
  if (cmd == "kv-closure") return {cj::encode(kv_closure(presentation(p, f))), {}};
  if (cmd == "closure") return {cj::encode(subalgebra_closure(presentation(p, f))), {}};
  if (cmd == "density") {
    std::vector<ConformalElement> gens;
    for (const auto& g : need(p, "generators")) gens.push_back(cj::decode_element(g));
    for (const auto& g : gens)
      if (g.size() != gens.front().size()) throw MalformedInput("generators differ in size");
    return {cj::encode(orbit_density_check(gens, f.degBound, f.n)), {}};
  }
  throw MalformedInput("unknown command " + cmd);
}

void fail(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in M_N(k[D, v]) and M_N(W)"};
  app.require_subcommand(1);
  Flags f;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"nproduct", "a o_n b (--circ for the shifted product)"},
      {"locality", "least N with a o_n b = 0 for n >= N"},
      {"bracket", "[a o_n b]"},
      {"phi", "v -> v + D (--inverse for v -> v - D)"},
      {"sigma", "transpose with v -> v - D"},
      {"symbol", "operator a(n) in M_N(W)"},
      {"act", "action of M_N(W) on an element"},
      {"reconstruct", "element from a differential sequence"},
      {"fit-seq", "differential sequence from operator samples"},
      {"smith", "Smith form with conjugating witness"},
      {"autom", "apply, invert or compose automorphisms"},
      {"autom-weyl", "automorphism of M_N(W)"},
      {"ideal-member", "one-sided ideal membership"},
      {"hseq", "h-sequences, their identities and coefficient rebasing"},
      {"verify", "seeded property suite"},
      {"classify", "classify an irreducible subalgebra"},
      {"kv-closure", "k[v]-closure and directness"},
      {"closure", "bounded subalgebra closure"},
      {"density", "bounded density check"},
  };
  CLI::Option* sizesOpt = nullptr;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_flag("--render", f.render, "human-readable output where available");
    if (name == "nproduct" || name == "bracket" || name == "symbol" || name == "hseq" ||
        name == "classify" || name == "density")
      sub->add_option("--n", f.n, "product index, symbol index, sequence length or symbol bound");
    if (name == "nproduct") sub->add_flag("--circ", f.circ);
    if (name == "phi" || name == "autom") sub->add_flag("--inverse", f.inverse);
    if (name == "autom") sub->add_flag("--compose", f.compose);
    if (name == "ideal-member") sub->add_option("--side", f.side, "left or right");
    if (name == "classify" || name == "density")
      sub->add_option("--deg-bound", f.degBound, "density degree bound");
    if (name == "classify" || name == "kv-closure" || name == "closure")
      sub->add_option("--iter-bound", f.iterBound, "override the closure iteration bound");
    if (name == "verify") {
      sub->add_option("--seed", f.seed);
      sub->add_option("--suite", f.suite);
      sizesOpt = sub->add_option("--sizes", f.sizes, "matrix sizes; empty runs nothing")
                     ->expected(0, -1);
      sub->add_option("--cases", f.cases);
      sub->add_flag("--corrupt", f.corrupt, "perturb the product kernels (negative control)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail("MalformedInput", e.what());
    return 2;
  }
  // a bare --sizes arrives as a single empty string
  if (sizesOpt && sizesOpt->count() > 0 && sizesOpt->results().size() == 1 &&
      sizesOpt->results().front().empty())
    f.sizes.clear();
  if ((f.n < 0) && app.get_subcommands().front()->get_name() != "hseq") {
    fail("MalformedInput", "--n must be non-negative");
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const Json payload = cmd == "verify" ? Json::object() : read_payload();
    const Result r = dispatch(cmd, f, payload);
    if (f.render && !r.text.empty())
      std::cout << r.text;
    else if (f.render)
      std::cout << r.json.dump(2) << "\n";
    else
      std::cout << r.json.dump() << "\n";
    if (cmd == "verify" && r.json["failures"].get<std::size_t>() > 0) return 1;
    return 0;
  } catch (const cendn::DomainError& e) {
    fail(e.kind(), e.what());
    return 1;
  } catch (const MalformedInput& e) {
    fail("MalformedInput", e.what());
    return 2;
  } catch (const Json::exception& e) {
    fail("MalformedInput", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    fail("MalformedInput", e.what());
    return 2;
  } catch (const std::exception& e) {
    fail("Error", e.what());
    return 1;
  }
}
