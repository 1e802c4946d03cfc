#include "cusemi/report.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cusemi {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json window_json(const Window& w) {
  ordered_json j;
  j["bound"] = w.bound;
  j["search_bound"] = w.search_bound;
  j["chain_samples"] = w.chain_samples;
  j["kmax"] = w.kmax;
  j["seed"] = w.seed;
  return j;
}

Window window_from(const ordered_json& j) {
  Window w;
  w.bound = j.at("bound").get<int>();
  w.search_bound = j.at("search_bound").get<int>();
  w.chain_samples = j.at("chain_samples").get<int>();
  w.kmax = j.at("kmax").get<int>();
  w.seed = j.at("seed").get<std::uint64_t>();
  return w;
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::ExpectedFail, Verdict::Unknown})
    if (verdict_name(v) == s) return v;
  throw std::invalid_argument("unknown verdict name '" + s + "'");
}

ordered_json result_json(const PredicateResult& r) {
  ordered_json j;
  j["predicate"] = r.predicate;
  j["verdict"] = verdict_name(r.verdict);
  j["samples"] = r.samples;
  j["witness"] = r.witness;
  ordered_json elems = ordered_json::array();
  for (const Element& e : r.witness_elems) {
    ordered_json je;
    je["sig"] = e.sig;
    je["elem"] = format_element(e);
    elems.push_back(std::move(je));
  }
  j["witness_elems"] = std::move(elems);
  j["aux"] = r.aux;
  j["note"] = r.note;
  return j;
}

PredicateResult result_from(const ordered_json& j) {
  PredicateResult r;
  r.predicate = j.at("predicate").get<std::string>();
  r.verdict = verdict_from(j.at("verdict").get<std::string>());
  r.samples = j.at("samples").get<long long>();
  r.witness = j.at("witness").get<std::string>();
  for (const auto& je : j.at("witness_elems")) {
    std::string sig = je.at("sig").get<std::string>();
    std::string text = je.at("elem").get<std::string>();
    std::optional<Element> e = parse_element(sig, text);
    if (!e) throw std::invalid_argument("unparseable witness element '" + text + "'");
    r.witness_elems.push_back(std::move(*e));
  }
  r.aux = j.at("aux").get<std::vector<long long>>();
  r.note = j.at("note").get<std::string>();
  return r;
}

ordered_json section_json(const AuditReport& a) {
  ordered_json j;
  j["subject"] = a.subject;
  j["window"] = window_json(a.window);
  j["status"] = a.status();
  ordered_json results = ordered_json::array();
  for (const PredicateResult& r : a.results) results.push_back(result_json(r));
  j["results"] = std::move(results);
  return j;
}

AuditReport section_from(const ordered_json& j) {
  AuditReport a;
  a.subject = j.at("subject").get<std::string>();
  a.window = window_from(j.at("window"));
  for (const auto& jr : j.at("results")) a.results.push_back(result_from(jr));
  return a;
}

std::string md_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '|')
      out += "\\|";
    else if (c == '\n')
      out += "<br>";
    else
      out += c;
  }
  return out;
}

}  // namespace

std::optional<ReportFormat> parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "markdown") return ReportFormat::Markdown;
  if (name == "dot") return ReportFormat::Dot;
  return std::nullopt;
}

int Report::exit_code() const {
  int code = 0;
  for (const AuditReport& a : sections) {
    int s = a.status();
    if (s == 1) return 1;
    if (s == 2) code = 2;
  }
  return code;
}

std::string emit_json(const Report& r) {
  ordered_json j;
  j["title"] = r.title;
  j["window"] = window_json(r.window);
  ordered_json facts = ordered_json::array();
  for (const auto& [k, v] : r.facts) {
    ordered_json jf;
    jf["fact"] = k;
    jf["value"] = v;
    facts.push_back(std::move(jf));
  }
  j["facts"] = std::move(facts);
  ordered_json sections = ordered_json::array();
  for (const AuditReport& a : r.sections) sections.push_back(section_json(a));
  j["sections"] = std::move(sections);
  j["exit_code"] = r.exit_code();
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report json: ") + e.what());
  }
  try {
    Report r;
    r.title = j.at("title").get<std::string>();
    r.window = window_from(j.at("window"));
    for (const auto& jf : j.at("facts"))
      r.facts.emplace_back(jf.at("fact").get<std::string>(), jf.at("value").get<std::string>());
    for (const auto& js : j.at("sections")) r.sections.push_back(section_from(js));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report json misses a field: ") + e.what());
  }
}

std::string emit_markdown(const Report& r) {
  std::ostringstream os;
  os << "# " << r.title << "\n\n";
  os << "window: bound=" << r.window.bound << ", search_bound=" << r.window.search_bound
     << ", chain_samples=" << r.window.chain_samples << ", kmax=" << r.window.kmax << "\n\n";
  os << "exit code: " << r.exit_code() << "\n";
  if (!r.facts.empty()) {
    os << "\n| fact | value |\n|---|---|\n";
    for (const auto& [k, v] : r.facts) os << "| " << md_escape(k) << " | " << md_escape(v)
                                          << " |\n";
  }
  for (const AuditReport& a : r.sections) {
    os << "\n## " << a.subject << "\n\n";
    os << "status: " << a.status() << "\n\n";
    os << "| predicate | verdict | samples | witness | note |\n|---|---|---|---|---|\n";
    for (const PredicateResult& p : a.results) {
      std::string witness = p.witness;
      if (!p.witness_elems.empty()) {
        witness += witness.empty() ? "" : "; ";
        witness += "elems:";
        for (const Element& e : p.witness_elems) witness += " " + format_element(e);
      }
      os << "| " << md_escape(p.predicate) << " | " << verdict_name(p.verdict) << " | "
         << p.samples << " | " << md_escape(witness) << " | " << md_escape(p.note) << " |\n";
    }
  }
  return os.str();
}

std::string emit_dot(const ModelPtr& m, int bound) {
  if (!m) throw std::invalid_argument("dot emission needs a carrier");
  // Canonical forms, deduplicated, in enumeration order.
  std::vector<Element> nodes;
  std::map<std::string, std::size_t> index;
  for (const Element& raw : m->window_elements(bound)) {
    Element e = m->canonical(raw);
    std::string label = format_element(e);
    if (index.emplace(label, nodes.size()).second) nodes.push_back(std::move(e));
  }
  const std::size_t n = nodes.size();
  std::vector<std::vector<char>> strict(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        strict[i][j] = m->leq(nodes[i], nodes[j]) && !m->leq(nodes[j], nodes[i]);

  std::ostringstream os;
  os << "digraph window {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const Element& e : nodes) os << "  \"" << format_element(e) << "\";\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!strict[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (strict[i][k] && strict[k][j]) cover = false;
      if (cover)
        os << "  \"" << format_element(nodes[i]) << "\" -> \"" << format_element(nodes[j])
           << "\";\n";
    }
  os << "}\n";
  return os.str();
}

std::string emit(const Report& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::Json:
      return emit_json(r);
    case ReportFormat::Markdown:
      return emit_markdown(r);
    case ReportFormat::Dot:
      if (!r.dot_subject)
        throw std::invalid_argument("this report has no carrier to draw; use json or markdown");
      return emit_dot(r.dot_subject, r.window.bound);
  }
  throw std::invalid_argument("unhandled format");
}

}  // namespace cusemi
