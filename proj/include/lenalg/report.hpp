#pragma once

// Machine-readable reports (docs/length-report.schema.json).

#include <string>

#include <json.hpp>

#include "lenalg/document.hpp"
#include "lenalg/identities.hpp"
#include "lenalg/kernels.hpp"

namespace lenalg {

using Json = nlohmann::ordered_json;

template <ExactField F>
Json vec_json(const F& field, const Vec<F>& v) {
  return Json(render_vec(field, v));
}

template <ExactField F>
Json matrix_json(const F& field, const Matrix<F>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(vec_json(field, row));
  return out;
}

Json report_header(const std::string& kind, const Document& doc);

template <ExactField F>
Json certificate_json(const Algebra<F>& a, const Decision<F>& d) {
  const auto& field = a.field();
  Json c;
  if (d.special) {
    c["type"] = "special-basis";
    c["basis"] = matrix_json(field, d.special->change.matrix());
    c["mu"] = vec_json(field, d.special->mu);
    c["beta"] = vec_json(field, d.special->beta);
    c["alpha"] = matrix_json(field, d.special->alpha);
  } else if (d.char_two) {
    c["type"] = "char-two-form";
    c["form"] = to_string(d.char_two->form);
    c["basis"] = matrix_json(field, d.char_two->change.matrix());
    c["beta"] = vec_json(field, d.char_two->beta);
    c["constants"] = matrix_json(field, d.char_two->constants);
  } else if (d.violation) {
    c["type"] = "violation";
    c["condition"] = d.violation->condition;
    c["indices"] = d.violation->indices;
    c["a"] = vec_json(field, d.violation->a);
    c["b"] = vec_json(field, d.violation->b);
    c["ab"] = vec_json(field, a.mul(d.violation->a, d.violation->b));
  } else {
    c["type"] = "trivial-dimension";
  }
  return c;
}

template <ExactField F>
Json decision_json(const Document& doc, const Algebra<F>& a, const Decision<F>& d) {
  Json r = report_header("LengthOneDecision", doc);
  r["value"] = d.verdict == Verdict::Yes;
  r["verdict"] = to_string(d.verdict);
  r["branch"] = d.branch;
  r["path"] = d.path;
  r["gloss_divergence"] = d.gloss_divergence;
  r["certificate"] = certificate_json(a, d);
  return r;
}

template <ExactField F>
Json oracle_json(const Document& doc, const Algebra<F>& a, const OracleResult<F>& o) {
  Json r = report_header("OracleCheck", doc);
  r["value"] = o.verdict == Verdict::Yes;
  r["verdict"] = to_string(o.verdict);
  r["complete"] = o.complete;
  r["pairs"] = o.pairs;
  r["path"] = Json::array({o.complete ? "exhaustive pair enumeration" : "sampled pairs (incomplete)"});
  if (o.witness) {
    Json c;
    c["type"] = "violation";
    c["condition"] = o.witness->condition;
    c["indices"] = Json::array();
    c["a"] = vec_json(a.field(), o.witness->a);
    c["b"] = vec_json(a.field(), o.witness->b);
    c["ab"] = vec_json(a.field(), a.mul(o.witness->a, o.witness->b));
    r["witness_index"] = o.witness_index;
    r["certificate"] = std::move(c);
  } else {
    r["certificate"] = nullptr;
  }
  return r;
}

template <ExactField F>
Json set_length_json(const Document& doc, const Algebra<F>& a, const std::vector<Vec<F>>& set, const SetLength<F>& s) {
  Json r = report_header("SetLength", doc);
  r["value"] = s.length;
  r["generates"] = s.generates;
  r["closure_dim"] = s.closure_dim;
  r["dims"] = s.dims;
  r["set"] = matrix_json(a.field(), set);
  r["path"] = Json::array({"word spans L_i(S) until dim L_n = ... = dim L_2n"});
  r["certificate"] = nullptr;
  return r;
}

Json algebra_length_json(const Document& doc, const Algebra<FiniteField>& a, const AlgebraLength& l);

template <ExactField F>
Json identity_json(const F& field, const IdentityVerdict<F>& v) {
  Json j;
  j["identity"] = v.identity;
  j["holds"] = v.holds;
  if (!v.holds) {
    j["indices"] = v.indices;
    j["defect"] = vec_json(field, v.defect);
    if (v.element) j["element"] = vec_json(field, *v.element);
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

// Re-checks a certificate against the algebra. Throws CertificateInvalid on
// malformed input; returns false when a well-formed certificate fails.
bool verify_certificate(const AnyAlgebra& a, const Json& certificate);

}  // namespace lenalg
