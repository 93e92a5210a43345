// JSON encodings of every value type. Output is canonical: object keys are
// sorted and monomial lists ascend by degree.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cendn/autom.hpp"
#include "cendn/closure.hpp"
#include "cendn/hseq.hpp"
#include "cendn/operator.hpp"
#include "cendn/report.hpp"
#include "cendn/smith.hpp"

namespace cendn::json {

using Json = nlohmann::json;

/// Input that does not match the expected schema.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw MalformedInput("expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return *it;
}

inline const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be a list");
  return j;
}

inline int degree(const Json& j) {
  if (!j.is_number_integer()) throw MalformedInput("degree must be an integer");
  const auto d = j.get<long long>();
  if (d < 0 || d > 100000) throw MalformedInput("degree out of range");
  return static_cast<int>(d);
}

}  // namespace detail

inline Json encode(const Rational& r) { return format_rational(r); }

inline Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  if (!j.is_string()) throw MalformedInput("rational must be a string or integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
}

inline int decode_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw MalformedInput(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw MalformedInput(std::string(what) + " out of range");
  return static_cast<int>(v);
}

template <Var X>
Json encode(const UniPoly<X>& f) {
  Json out = Json::array();
  for (const auto& [k, c] : f.terms()) out.push_back(Json::array({k, encode(c)}));
  return out;
}

template <Var X>
UniPoly<X> decode_unipoly(const Json& j) {
  UniPoly<X> f;
  for (const auto& t : detail::array(j, "polynomial")) {
    if (!t.is_array() || t.size() != 2) throw MalformedInput("term must be [degree, coeff]");
    f.add_term(detail::degree(t[0]), decode_rational(t[1]));
  }
  return f;
}

inline Json encode(const BiPoly& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms())
    out.push_back(Json::array({m.first, m.second, encode(c)}));
  return out;
}

inline BiPoly decode_bipoly(const Json& j) {
  BiPoly f;
  for (const auto& t : detail::array(j, "polynomial")) {
    if (!t.is_array() || t.size() != 3)
      throw MalformedInput("term must be [degD, degV, coeff]");
    f.add_term({detail::degree(t[0]), detail::degree(t[1])}, decode_rational(t[2]));
  }
  return f;
}

inline Json encode(const WeylElement& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms())
    out.push_back(Json::array({m.first, m.second, encode(c)}));
  return out;
}

inline WeylElement decode_weyl(const Json& j) {
  WeylElement f;
  for (const auto& t : detail::array(j, "Weyl element")) {
    if (!t.is_array() || t.size() != 3)
      throw MalformedInput("term must be [degP, degQ, coeff]");
    f.add_term({detail::degree(t[0]), detail::degree(t[1])}, decode_rational(t[2]));
  }
  return f;
}

/// Row-major nested lists.
template <typename T>
Json encode_rows(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T, typename F>
Matrix<T> decode_rows(const Json& j, F&& entry) {
  const auto& rows = detail::array(j, "matrix");
  const std::size_t n = rows.size();
  if (n == 0) throw MalformedInput("matrix must be non-empty");
  std::vector<T> data;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw MalformedInput("matrix must be square");
    for (const auto& e : row) data.push_back(entry(e));
  }
  return Matrix<T>(n, std::move(data));
}

template <Var X>
Json encode(const PolyMatrix<X>& m) {
  return encode_rows(m);
}
template <Var X>
PolyMatrix<X> decode_polymatrix(const Json& j) {
  return decode_rows<UniPoly<X>>(j, [](const Json& e) { return decode_unipoly<X>(e); });
}

inline Json encode(const WeylMatrix& m) { return encode_rows(m); }
inline WeylMatrix decode_weylmatrix(const Json& j) {
  return decode_rows<WeylElement>(j, [](const Json& e) { return decode_weyl(e); });
}

/// WeylMatrix, or a bare Weyl element read as a 1x1 matrix.
inline WeylMatrix decode_weyl_operator(const Json& j) {
  if (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array())
    return decode_weylmatrix(j);
  return WeylMatrix(1, {decode_weyl(j)});
}

inline Json encode(const ConformalElement& a) {
  return Json{{"N", a.size()}, {"entries", encode_rows(a)}};
}

inline ConformalElement decode_element(const Json& j) {
  const int N = decode_int(detail::field(j, "N"), "N");
  auto m = decode_rows<BiPoly>(detail::field(j, "entries"),
                               [](const Json& e) { return decode_bipoly(e); });
  if (N < 1 || m.size() != static_cast<std::size_t>(N))
    throw MalformedInput("N does not match the entries");
  return m;
}

inline Json encode(const DifferentialSequence& s) {
  Json c = Json::array();
  for (const auto& m : s.coeffs) c.push_back(encode(m));
  return Json{{"coeffs", c}};
}

inline DifferentialSequence decode_sequence(const Json& j) {
  DifferentialSequence s;
  for (const auto& m : detail::array(detail::field(j, "coeffs"), "coeffs"))
    s.coeffs.push_back(decode_polymatrix<Var::p>(m));
  for (const auto& m : s.coeffs)
    if (m.size() != s.coeffs.front().size()) throw MalformedInput("coefficient sizes differ");
  return s;
}

inline Json encode(const OperatorSample& s) { return Json{{"n", s.n}, {"op", encode(s.op)}}; }

inline OperatorSample decode_sample(const Json& j) {
  OperatorSample s;
  s.n = decode_int(detail::field(j, "n"), "n");
  if (s.n < 0) throw MalformedInput("sample index must be non-negative");
  s.op = decode_weyl_operator(detail::field(j, "op"));
  return s;
}

inline Json encode(const AutomorphismSpec& t) {
  return Json{{"alpha", encode(t.alpha)}, {"Q", encode(t.Q)}, {"h", encode(t.h)}};
}

inline AutomorphismSpec decode_autom(const Json& j) {
  AutomorphismSpec t;
  t.alpha = j.contains("alpha") ? decode_rational(j["alpha"]) : Rational(0);
  t.Q = decode_polymatrix<Var::v>(detail::field(j, "Q"));
  if (j.contains("h")) t.h = decode_unipoly<Var::p>(j["h"]);
  return t;
}

inline SubalgebraPresentation decode_presentation(const Json& j, int defaultDeg = 4,
                                                  int defaultIter = 8) {
  SubalgebraPresentation p;
  for (const auto& g : detail::array(detail::field(j, "generators"), "generators"))
    p.generators.push_back(decode_element(g));
  p.vDegBound = j.contains("vDegBound") ? decode_int(j["vDegBound"], "vDegBound") : defaultDeg;
  p.iterBound = j.contains("iterBound") ? decode_int(j["iterBound"], "iterBound") : defaultIter;
  for (const auto& g : p.generators)
    if (g.size() != p.generators.front().size())
      throw MalformedInput("generators differ in size");
  return p;
}

inline Json encode(const SubalgebraPresentation& p) {
  Json g = Json::array();
  for (const auto& e : p.generators) g.push_back(encode(e));
  return Json{{"generators", g}, {"vDegBound", p.vDegBound}, {"iterBound", p.iterBound}};
}

template <Var X>
Json encode(const SmithForm<X>& s) {
  return Json{{"T", encode(s.T)}, {"Dg", encode(s.Dg)}, {"U", encode(s.U)}};
}

inline Json encode(const HSeqPair& s) {
  Json lo = Json::array(), up = Json::array();
  for (const auto& f : s.lower) lo.push_back(encode(f));
  for (const auto& f : s.upper) up.push_back(encode(f));
  return Json{{"h", encode(s.h)}, {"lower", lo}, {"upper", up}};
}

/// Per-tag pass/fail counts plus the labels of failing instances.
inline Json encode(const CheckReport& r) {
  Json tags = Json::object();
  for (const auto& c : r.checks) {
    Json& t = tags[c.tag];
    if (t.is_null()) t = Json{{"passed", 0}, {"failed", 0}, {"failures", Json::array()}};
    if (c.passed) {
      t["passed"] = t["passed"].get<int>() + 1;
    } else {
      t["failed"] = t["failed"].get<int>() + 1;
      t["failures"].push_back(c.label);
    }
  }
  return Json{{"checks", r.checks.size()}, {"failures", r.failures()}, {"tags", tags}};
}

inline Json encode(const ClosureResult& c) {
  Json basis = Json::array();
  for (const auto& e : c.elements()) basis.push_back(encode(e));
  return Json{{"basis", basis},
              {"rank", c.basis.rank()},
              {"fixedPoint", c.fixedPoint},
              {"truncated", c.truncated},
              {"closed", c.closed()},
              {"iterations", c.iterations}};
}

inline Json encode(const KVClosure& k) {
  return Json{{"idealQ", encode(k.idealQ)},
              {"directness", directness_name(k.directness)},
              {"certifiedAtBound", k.certifiedAtBound},
              {"alarm", k.alarm},
              {"closureRank", k.closure.basis.rank()}};
}

inline Json encode(const DensityResult& d) {
  return Json{{"verdict", d.verdict == Density::Dense ? "Dense" : "Unknown"},
              {"shift", d.shift},
              {"certified", d.certified},
              {"operators", d.operators}};
}

inline Json encode(const Classification& c) {
  Json out{{"verdict", verdict_name(c.verdict)},
           {"density", encode(c.density)},
           {"degBound", c.degBound},
           {"certifiedAtBound", c.certifiedAtBound},
           {"alarm", c.alarm}};
  if (c.witness) out["witness"] = encode(*c.witness);
  if (c.Q) out["Q"] = encode(*c.Q);
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

}  // namespace cendn::json
