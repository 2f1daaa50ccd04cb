#include "szlab/reports.hpp"

#include <sstream>

namespace szlab {
namespace {

std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::vector<std::string> quoted;
  quoted.reserve(cells.size());
  for (const auto& c : cells) quoted.push_back(csv_quote(c));
  return join(quoted, ',') + "\n";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string opt_q4_str(const std::optional<Q4>& q) {
  return q ? q->to_string() : std::string();
}

std::string sign_str(const std::optional<int>& s) {
  if (!s) return "";
  return *s > 0 ? "+" : (*s < 0 ? "-" : "0");
}

const char* kind_str(IndexKind k) { return index_kind_name(k); }

// Text helper: "  name  value" lines with aligned names.
struct TextBlock {
  std::vector<std::pair<std::string, std::string>> rows;
  void add(const std::string& k, const std::string& v) { rows.push_back({k, v}); }
  std::string str() const {
    size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    std::string out;
    for (const auto& [k, v] : rows) {
      out += k;
      out.append(w - k.size() + 2, ' ');
      out += v;
      out += '\n';
    }
    return out;
  }
};

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw Error(ErrorKind::BadParams, "unknown format '" + name + "' (json|csv|text)");
}

const char* format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "text";
  }
  return "?";
}

Json json_of(const Q4& q) {
  return Json{{"q4", q.to_string()}, {"decimal", q.to_double()}};
}

Q4 q4_from_json(const Json& j) {
  std::string s = j.is_object() ? j.at("q4").get<std::string>()
                                : j.get<std::string>();
  auto q = Q4::parse(s);
  if (!q) throw Error(ErrorKind::ParseError, "not a quarter value: '" + s + "'");
  return *q;
}

// ---------------------------------------------------------------- IndexSuite

Json json_of(const IndexSuite& s) {
  return Json{{"W", s.W},
              {"W_e_min", s.W_e_min},
              {"W_e_line", s.W_e_line},
              {"Sz", json_of(s.Sz)},
              {"Sz_star", json_of(s.Sz_star)},
              {"Sz_e", s.Sz_e},
              {"Sz_e_star", json_of(s.Sz_e_star)}};
}

IndexSuite index_suite_from_json(const Json& j) {
  IndexSuite s;
  s.W = j.at("W").get<std::int64_t>();
  s.W_e_min = j.at("W_e_min").get<std::int64_t>();
  s.W_e_line = j.at("W_e_line").get<std::int64_t>();
  s.Sz = q4_from_json(j.at("Sz"));
  s.Sz_star = q4_from_json(j.at("Sz_star"));
  s.Sz_e = j.at("Sz_e").get<std::int64_t>();
  s.Sz_e_star = q4_from_json(j.at("Sz_e_star"));
  return s;
}

bool same_report(const IndexSuite& a, const IndexSuite& b) {
  return a.W == b.W && a.W_e_min == b.W_e_min && a.W_e_line == b.W_e_line &&
         a.Sz == b.Sz && a.Sz_star == b.Sz_star && a.Sz_e == b.Sz_e &&
         a.Sz_e_star == b.Sz_e_star;
}

std::string render(const IndexSuite& s, Format f) {
  switch (f) {
    case Format::Json: return dump(json_of(s));
    case Format::Csv:
      return csv_row({"W", "W_e_min", "W_e_line", "Sz", "Sz_star", "Sz_e",
                      "Sz_e_star"}) +
             csv_row({std::to_string(s.W), std::to_string(s.W_e_min),
                      std::to_string(s.W_e_line), s.Sz.to_string(),
                      s.Sz_star.to_string(), std::to_string(s.Sz_e),
                      s.Sz_e_star.to_string()});
    case Format::Text: {
      TextBlock t;
      t.add("W", std::to_string(s.W));
      t.add("W_e_min", std::to_string(s.W_e_min));
      t.add("W_e_line", std::to_string(s.W_e_line));
      t.add("Sz", s.Sz.to_string());
      t.add("Sz_star", s.Sz_star.to_string());
      t.add("Sz_e", std::to_string(s.Sz_e));
      t.add("Sz_e_star", s.Sz_e_star.to_string());
      return t.str();
    }
  }
  return {};
}

// ------------------------------------------------------- DecompositionReport

Json json_of(const DecompositionReport& r) {
  return Json{{"n", r.n},
              {"g", r.g},
              {"delta_g", r.delta_g},
              {"direct", json_of(r.direct)},
              {"via_lemma21", json_of(r.via_lemma21)},
              {"via_cor23", json_of(r.via_cor23)},
              {"via_s1s2", json_of(r.via_s1s2)},
              {"sz_e_direct", r.sz_e_direct},
              {"via_lemma22", r.via_lemma22},
              {"s1", r.s1},
              {"s2", r.s2},
              {"s1_direct", r.s1_direct},
              {"s2_direct", r.s2_direct},
              {"all_agree", r.all_agree}};
}

DecompositionReport decomposition_from_json(const Json& j) {
  DecompositionReport r;
  r.n = j.at("n").get<int>();
  r.g = j.at("g").get<int>();
  r.delta_g = j.at("delta_g").get<int>();
  r.direct = q4_from_json(j.at("direct"));
  r.via_lemma21 = q4_from_json(j.at("via_lemma21"));
  r.via_cor23 = q4_from_json(j.at("via_cor23"));
  r.via_s1s2 = q4_from_json(j.at("via_s1s2"));
  r.sz_e_direct = j.at("sz_e_direct").get<std::int64_t>();
  r.via_lemma22 = j.at("via_lemma22").get<std::int64_t>();
  r.s1 = j.at("s1").get<std::int64_t>();
  r.s2 = j.at("s2").get<std::int64_t>();
  r.s1_direct = j.at("s1_direct").get<std::int64_t>();
  r.s2_direct = j.at("s2_direct").get<std::int64_t>();
  r.all_agree = j.at("all_agree").get<bool>();
  return r;
}

bool same_report(const DecompositionReport& a, const DecompositionReport& b) {
  return a.n == b.n && a.g == b.g && a.delta_g == b.delta_g &&
         a.direct == b.direct && a.via_lemma21 == b.via_lemma21 &&
         a.via_cor23 == b.via_cor23 && a.via_s1s2 == b.via_s1s2 &&
         a.sz_e_direct == b.sz_e_direct && a.via_lemma22 == b.via_lemma22 &&
         a.s1 == b.s1 && a.s2 == b.s2 && a.s1_direct == b.s1_direct &&
         a.s2_direct == b.s2_direct && a.all_agree == b.all_agree;
}

static const std::vector<std::string> kDecompositionCsvHeader = {
    "n",  "g",  "delta_g",     "direct", "via_lemma21", "via_cor23", "via_s1s2",
    "sz_e_direct", "via_lemma22", "s1",   "s2",   "s1_direct", "s2_direct",
    "all_agree"};

static std::vector<std::string> decomposition_cells(const DecompositionReport& r) {
  return {std::to_string(r.n),
          std::to_string(r.g),
          std::to_string(r.delta_g),
          r.direct.to_string(),
          r.via_lemma21.to_string(),
          r.via_cor23.to_string(),
          r.via_s1s2.to_string(),
          std::to_string(r.sz_e_direct),
          std::to_string(r.via_lemma22),
          std::to_string(r.s1),
          std::to_string(r.s2),
          std::to_string(r.s1_direct),
          std::to_string(r.s2_direct),
          r.all_agree ? "true" : "false"};
}

std::string render(const DecompositionReport& r, Format f) {
  switch (f) {
    case Format::Json: return dump(json_of(r));
    case Format::Csv:
      return csv_row(kDecompositionCsvHeader) + csv_row(decomposition_cells(r));
    case Format::Text: {
      TextBlock t;
      t.add("n", std::to_string(r.n));
      t.add("girth", std::to_string(r.g));
      t.add("Sz_e_star direct", r.direct.to_string());
      t.add("Sz_e_star via Sz_e + parity term", r.via_lemma21.to_string());
      t.add("Sz_e_star via Sz + transmissions", r.via_cor23.to_string());
      t.add("Sz_e_star via S1+S2", r.via_s1s2.to_string());
      t.add("Sz_e direct", std::to_string(r.sz_e_direct));
      t.add("Sz_e via Sz + transmissions", std::to_string(r.via_lemma22));
      t.add("S1 closed form / direct",
            std::to_string(r.s1) + " / " + std::to_string(r.s1_direct));
      t.add("S2 closed form / direct",
            std::to_string(r.s2) + " / " + std::to_string(r.s2_direct));
      t.add("all_agree", r.all_agree ? "true" : "false");
      return t.str();
    }
  }
  return {};
}

// ----------------------------------------------------------- TransformReport

Json json_of(const TransformReport& r) {
  Json j{{"name", r.name},
         {"kind", kind_str(r.kind)},
         {"before_graph6", r.before_graph6},
         {"after_graph6", r.after_graph6},
         {"value_before", json_of(r.value_before)},
         {"value_after", json_of(r.value_after)},
         {"actual_delta", json_of(r.actual_delta)}};
  j["predicted_delta"] = r.predicted_delta ? json_of(*r.predicted_delta) : Json();
  j["predicted_sign"] = r.predicted_sign ? Json(*r.predicted_sign) : Json();
  j["allow_equal"] = r.allow_equal;
  j["agrees"] = r.agrees;
  return j;
}

TransformReport transform_from_json(const Json& j) {
  TransformReport r;
  r.name = j.at("name").get<std::string>();
  r.kind = parse_index_kind(j.at("kind").get<std::string>());
  r.before_graph6 = j.at("before_graph6").get<std::string>();
  r.after_graph6 = j.at("after_graph6").get<std::string>();
  r.value_before = q4_from_json(j.at("value_before"));
  r.value_after = q4_from_json(j.at("value_after"));
  r.actual_delta = q4_from_json(j.at("actual_delta"));
  if (!j.at("predicted_delta").is_null())
    r.predicted_delta = q4_from_json(j.at("predicted_delta"));
  if (!j.at("predicted_sign").is_null())
    r.predicted_sign = j.at("predicted_sign").get<int>();
  r.allow_equal = j.at("allow_equal").get<bool>();
  r.agrees = j.at("agrees").get<bool>();
  return r;
}

bool same_report(const TransformReport& a, const TransformReport& b) {
  return a.name == b.name && a.kind == b.kind &&
         a.before_graph6 == b.before_graph6 && a.after_graph6 == b.after_graph6 &&
         a.value_before == b.value_before && a.value_after == b.value_after &&
         a.actual_delta == b.actual_delta &&
         a.predicted_delta == b.predicted_delta &&
         a.predicted_sign == b.predicted_sign && a.allow_equal == b.allow_equal &&
         a.agrees == b.agrees;
}

static const std::vector<std::string> kTransformCsvHeader = {
    "name",         "kind",           "before_graph6",  "after_graph6",
    "value_before", "value_after",    "actual_delta",   "predicted_delta",
    "predicted_sign", "allow_equal",  "agrees"};

static std::vector<std::string> transform_cells(const TransformReport& r) {
  return {r.name,
          kind_str(r.kind),
          r.before_graph6,
          r.after_graph6,
          r.value_before.to_string(),
          r.value_after.to_string(),
          r.actual_delta.to_string(),
          opt_q4_str(r.predicted_delta),
          sign_str(r.predicted_sign),
          r.allow_equal ? "true" : "false",
          r.agrees ? "true" : "false"};
}

std::string render(const TransformReport& r, Format f) {
  switch (f) {
    case Format::Json: return dump(json_of(r));
    case Format::Csv:
      return csv_row(kTransformCsvHeader) + csv_row(transform_cells(r));
    case Format::Text: {
      TextBlock t;
      t.add("check", r.name);
      t.add("index", kind_str(r.kind));
      t.add("before", r.before_graph6);
      t.add("after", r.after_graph6);
      t.add("value before", r.value_before.to_string());
      t.add("value after", r.value_after.to_string());
      t.add("actual delta", r.actual_delta.to_string());
      if (r.predicted_delta) t.add("predicted delta", r.predicted_delta->to_string());
      if (r.predicted_sign)
        t.add("predicted sign",
              sign_str(r.predicted_sign) + std::string(r.allow_equal ? " (or 0)" : ""));
      t.add("agrees", r.agrees ? "true" : "false");
      return t.str();
    }
  }
  return {};
}

// -------------------------------------------------------------- SearchReport

Json json_of(const SearchReport& r) {
  Json mins = Json::array();
  for (const auto& m : r.minimizers)
    mins.push_back(Json{{"code_hex", m.code_hex}, {"graph6", m.graph6}});
  Json j{{"n", r.n},
         {"d", r.d},
         {"kind", kind_str(r.kind)},
         {"examined", r.examined}};
  j["minimum"] = r.minimum ? json_of(*r.minimum) : Json();
  j["minimizers"] = std::move(mins);
  return j;
}

SearchReport search_from_json(const Json& j) {
  SearchReport r;
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.kind = parse_index_kind(j.at("kind").get<std::string>());
  r.examined = j.at("examined").get<std::uint64_t>();
  if (!j.at("minimum").is_null()) r.minimum = q4_from_json(j.at("minimum"));
  for (const auto& m : j.at("minimizers"))
    r.minimizers.push_back({m.at("code_hex").get<std::string>(),
                            m.at("graph6").get<std::string>()});
  return r;
}

bool same_report(const SearchReport& a, const SearchReport& b) {
  if (!(a.n == b.n && a.d == b.d && a.kind == b.kind && a.examined == b.examined &&
        a.minimum == b.minimum && a.minimizers.size() == b.minimizers.size()))
    return false;
  for (size_t i = 0; i < a.minimizers.size(); ++i)
    if (a.minimizers[i].code_hex != b.minimizers[i].code_hex ||
        a.minimizers[i].graph6 != b.minimizers[i].graph6)
      return false;
  return true;
}

std::string render(const SearchReport& r, Format f) {
  switch (f) {
    case Format::Json: return dump(json_of(r));
    case Format::Csv: {
      std::string out = csv_row({"n", "d", "kind", "examined", "minimum",
                                 "minimizer_code_hex", "minimizer_graph6"});
      auto scalar = [&](const std::string& code, const std::string& g6) {
        return csv_row({std::to_string(r.n), std::to_string(r.d), kind_str(r.kind),
                        std::to_string(r.examined), opt_q4_str(r.minimum), code, g6});
      };
      if (r.minimizers.empty()) {
        out += scalar("", "");
      } else {
        for (const auto& m : r.minimizers) out += scalar(m.code_hex, m.graph6);
      }
      return out;
    }
    case Format::Text: {
      TextBlock t;
      t.add("n", std::to_string(r.n));
      t.add("d", std::to_string(r.d));
      t.add("index", kind_str(r.kind));
      t.add("classes examined", std::to_string(r.examined));
      t.add("minimum", r.minimum ? r.minimum->to_string() : "(empty class)");
      std::string out = t.str();
      for (const auto& m : r.minimizers)
        out += "minimizer  " + m.graph6 + "  code " + m.code_hex + "\n";
      return out;
    }
  }
  return {};
}

// -------------------------------------------------------- VerificationReport

Json json_of(const VerificationReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json mins = Json::array();
    for (const auto& m : row.minimizers)
      mins.push_back(Json{{"code_hex", m.code_hex}, {"graph6", m.graph6}});
    rows.push_back(Json{{"d", row.d},
                        {"classes", row.classes},
                        {"minimum", json_of(row.minimum)},
                        {"minimizers", std::move(mins)},
                        {"minimizer_girths", row.minimizer_girths},
                        {"predicted_graph6", row.predicted_graph6},
                        {"matched", row.matched},
                        {"unique", row.unique}});
  }
  Json hist = Json::object();
  for (const auto& [g, c] : r.girth_histogram) hist[std::to_string(g)] = c;
  return Json{{"n", r.n},
              {"rows", std::move(rows)},
              {"girth_histogram", std::move(hist)},
              {"girth_bound_ok", r.girth_bound_ok},
              {"co_minimal_family_ok", r.co_minimal_family_ok},
              {"co_minimal_family_graph6", r.co_minimal_family_graph6},
              {"classes_examined", r.classes_examined},
              {"pass", r.pass}};
}

VerificationReport verification_from_json(const Json& j) {
  VerificationReport r;
  r.n = j.at("n").get<int>();
  for (const auto& jr : j.at("rows")) {
    VerificationRow row;
    row.d = jr.at("d").get<int>();
    row.classes = jr.at("classes").get<std::uint64_t>();
    row.minimum = q4_from_json(jr.at("minimum"));
    for (const auto& m : jr.at("minimizers"))
      row.minimizers.push_back({m.at("code_hex").get<std::string>(),
                                m.at("graph6").get<std::string>()});
    row.minimizer_girths = jr.at("minimizer_girths").get<std::vector<int>>();
    row.predicted_graph6 = jr.at("predicted_graph6").get<std::string>();
    row.matched = jr.at("matched").get<bool>();
    row.unique = jr.at("unique").get<bool>();
    r.rows.push_back(std::move(row));
  }
  for (const auto& [k, v] : j.at("girth_histogram").items())
    r.girth_histogram[std::stoi(k)] = v.get<int>();
  r.girth_bound_ok = j.at("girth_bound_ok").get<bool>();
  r.co_minimal_family_ok = j.at("co_minimal_family_ok").get<bool>();
  r.co_minimal_family_graph6 =
      j.at("co_minimal_family_graph6").get<std::vector<std::string>>();
  r.classes_examined = j.at("classes_examined").get<std::uint64_t>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

bool same_report(const VerificationReport& a, const VerificationReport& b) {
  if (!(a.n == b.n && a.rows.size() == b.rows.size() &&
        a.girth_histogram == b.girth_histogram &&
        a.girth_bound_ok == b.girth_bound_ok &&
        a.co_minimal_family_ok == b.co_minimal_family_ok &&
        a.co_minimal_family_graph6 == b.co_minimal_family_graph6 &&
        a.classes_examined == b.classes_examined && a.pass == b.pass))
    return false;
  for (size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (!(x.d == y.d && x.classes == y.classes && x.minimum == y.minimum &&
          x.minimizer_girths == y.minimizer_girths &&
          x.predicted_graph6 == y.predicted_graph6 && x.matched == y.matched &&
          x.unique == y.unique && x.minimizers.size() == y.minimizers.size()))
      return false;
    for (size_t k = 0; k < x.minimizers.size(); ++k)
      if (x.minimizers[k].code_hex != y.minimizers[k].code_hex ||
          x.minimizers[k].graph6 != y.minimizers[k].graph6)
        return false;
  }
  return true;
}

std::string render(const VerificationReport& r, Format f) {
  switch (f) {
    case Format::Json: return dump(json_of(r));
    case Format::Csv: {
      std::string out = csv_row({"n", "d", "classes", "minimum", "matched",
                                 "unique", "girths", "predicted_graph6",
                                 "found_graph6"});
      for (const auto& row : r.rows) {
        std::vector<std::string> girths, found;
        for (int g : row.minimizer_girths) girths.push_back(std::to_string(g));
        for (const auto& m : row.minimizers) found.push_back(m.graph6);
        out += csv_row({std::to_string(r.n), std::to_string(row.d),
                        std::to_string(row.classes), row.minimum.to_string(),
                        row.matched ? "true" : "false",
                        row.unique ? "true" : "false", join(girths, ';'),
                        row.predicted_graph6, join(found, ';')});
      }
      return out;
    }
    case Format::Text: {
      std::ostringstream os;
      os << "n = " << r.n << ", classes examined = " << r.classes_examined
         << "\n";
      os << "  d  classes   minimum      match  unique  predicted / found\n";
      for (const auto& row : r.rows) {
        std::string found = row.minimizers.empty() ? "-" : row.minimizers[0].graph6;
        if (row.minimizers.size() > 1)
          found += " (+" + std::to_string(row.minimizers.size() - 1) + " more)";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%3d  %-8llu  %-11s  %-5s  %-6s  ",
                      row.d, static_cast<unsigned long long>(row.classes),
                      row.minimum.to_string().c_str(),
                      row.matched ? "yes" : "NO",
                      row.unique ? "yes" : "no");
        os << buf << row.predicted_graph6 << " / " << found << "\n";
      }
      os << "girth histogram:";
      for (const auto& [g, c] : r.girth_histogram) os << " " << g << ":" << c;
      os << "\n";
      os << "girth bound (<= 4) " << (r.girth_bound_ok ? "holds" : "VIOLATED")
         << "; co-minimal family at d = n-2 "
         << (r.co_minimal_family_ok ? "as expected" : "UNEXPECTED") << "\n";
      os << (r.pass ? "PASS" : "FAIL") << "\n";
      return os.str();
    }
  }
  return {};
}

// ------------------------------------------------------------------- batches

std::string render_batch(const std::vector<DecompositionReport>& rs, Format f) {
  switch (f) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : rs) arr.push_back(json_of(r));
      return dump(arr);
    }
    case Format::Csv: {
      std::string out = csv_row(kDecompositionCsvHeader);
      for (const auto& r : rs) out += csv_row(decomposition_cells(r));
      return out;
    }
    case Format::Text: {
      std::string out;
      for (const auto& r : rs) {
        out += render(r, Format::Text);
        out += '\n';
      }
      return out;
    }
  }
  return {};
}

std::string render_batch(const std::vector<TransformReport>& rs, Format f) {
  switch (f) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : rs) arr.push_back(json_of(r));
      return dump(arr);
    }
    case Format::Csv: {
      std::string out = csv_row(kTransformCsvHeader);
      for (const auto& r : rs) out += csv_row(transform_cells(r));
      return out;
    }
    case Format::Text: {
      std::string out;
      for (const auto& r : rs) {
        out += render(r, Format::Text);
        out += '\n';
      }
      return out;
    }
  }
  return {};
}

// -------------------------------------------------------------------- errors

Json json_of(const Error& e) {
  // what() is "<kind>: <message>"; keep the bare message next to the kind key.
  std::string msg = e.what();
  std::string prefix = std::string(error_kind_name(e.kind())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  return Json{{"error", Json{{"kind", error_kind_name(e.kind())},
                             {"message", msg}}}};
}

std::string render_error(const Error& e, Format f) {
  if (f == Format::Json) return dump(json_of(e));
  return std::string("error: ") + e.what() + "\n";
}

}  // namespace szlab
