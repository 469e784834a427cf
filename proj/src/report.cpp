#include "wallcross/report.hpp"

namespace wallcross {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const ChernClass& c) {
  Json arr = Json::array();
  for (auto v : c.coords()) arr.push_back(v);
  return arr;
}

Json to_json(const NumClass& c) {
  Json obj;
  obj["beta"] = to_json(c.beta);
  obj["d"] = c.d;
  return obj;
}

Json to_json(const HallElement& e) {
  Json arr = Json::array();
  for (const auto& [word, coeff] : e.terms()) {
    Json term;
    term["coeff"] = to_json(coeff);
    Json w = Json::array();
    for (const auto& letter : word) w.push_back(to_json(letter));
    term["word"] = std::move(w);
    arr.push_back(std::move(term));
  }
  return arr;
}

Json to_json(const LieElement& e) {
  Json arr = Json::array();
  for (const auto& [cls, coeff] : e.terms()) {
    Json term;
    term["coeff"] = to_json(coeff);
    term["class"] = to_json(cls);
    arr.push_back(std::move(term));
  }
  return arr;
}

Json to_json(const StackFnElement& e) {
  Json obj;
  for (const auto& [sym, coeff] : e.terms()) obj[stack_symbol_name(sym)] = to_json(coeff);
  return obj;
}

Json to_json(const LambdaChoice& c) {
  Json obj;
  obj["l"] = c.l;
  obj["m"] = c.m;
  obj["a"] = c.a;
  obj["b"] = c.b;
  return obj;
}

Json to_json(const CaseSplit& s) {
  Json obj;
  obj["u1a"] = to_json(s.u1a);
  obj["u1b"] = to_json(s.u1b);
  obj["u2a"] = to_json(s.u2a);
  obj["u2b"] = to_json(s.u2b);
  obj["u3"] = to_json(s.u3);
  obj["total"] = to_json(s.total());
  return obj;
}

Json to_json(const FlatNestedReport& r) {
  Json obj;
  obj["orderings"] = r.orderings;
  obj["flat"] = to_json(r.flat_sum);
  obj["nested"] = to_json(r.nested_sum);
  obj["identical"] = r.identical;
  obj["difference"] = to_json(r.difference);
  return obj;
}

Json to_json(const InvariantResult& r) {
  Json obj;
  obj["closed_form"] = to_json(r.closed_form);
  obj["bracket_eval"] = to_json(r.bracket_eval);
  obj["agree"] = r.agree;
  Json per = Json::array();
  for (const auto& d : r.per_decomposition) {
    Json item;
    Json parts = Json::array();
    for (const auto& p : d.parts) parts.push_back(to_json(p));
    item["parts"] = std::move(parts);
    item["closed_form"] = to_json(d.closed_form);
    item["bracket_eval"] = to_json(d.bracket_eval);
    per.push_back(std::move(item));
  }
  obj["per_decomposition"] = std::move(per);
  return obj;
}

Json to_json(const AuditCheck& c) {
  Json obj;
  obj["name"] = c.name;
  obj["pass"] = c.pass;
  if (!c.detail.empty()) obj["detail"] = c.detail;
  return obj;
}

Json to_json(const AuditReport& r) {
  Json obj;
  obj["title"] = r.title;
  obj["pass"] = r.all_pass();
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  obj["checks"] = std::move(checks);
  return obj;
}

Json to_json(const SelfCheckSummary& s) {
  Json obj;
  obj["all_pass"] = s.all_pass();
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  obj["reports"] = std::move(reports);
  return obj;
}

}  // namespace wallcross
