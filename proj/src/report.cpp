#include <qspec/report.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qspec {

  namespace {
    EigenvalueRecord record_of(const SpectrumEntry& e)
    {
      EigenvalueRecord r;
      if (e.value.is_integer()) {
        r.kind = "integer";
        r.value = to_string(e.value.as_integer().value);
      } else {
        const auto& rs = e.value.as_root_scaled();
        r.kind = "root_scaled";
        r.rootOrder = std::to_string(rs.rootOrder);
        r.radicand = to_string(rs.radicand);
        r.phase = std::to_string(rs.phase);
      }
      r.multiplicity = to_string(e.multiplicity);
      r.display = e.value.to_string();
      return r;
    }

    std::string bool_text(bool b) { return b ? "true" : "false"; }

    std::string join(const std::vector<std::string>& parts, const std::string& sep)
    {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
      return out;
    }

    std::string spectrum_text(const std::vector<EigenvalueRecord>& recs)
    {
      std::vector<std::string> parts;
      for (const auto& r : recs)
        parts.push_back(r.display + "[" + r.multiplicity + "]");
      return join(parts, ";");
    }

    nlohmann::ordered_json eigen_json(const EigenvalueRecord& r)
    {
      nlohmann::ordered_json j;
      j["kind"] = r.kind;
      if (r.kind == "integer") {
        j["value"] = r.value;
      } else {
        j["rootOrder"] = r.rootOrder;
        j["radicand"] = r.radicand;
        j["phase"] = r.phase;
      }
      j["multiplicity"] = r.multiplicity;
      j["display"] = r.display;
      return j;
    }

    std::string opt_string(const nlohmann::json& j, const char* key)
    {
      auto it = j.find(key);
      return it == j.end() ? std::string() : it->get<std::string>();
    }

    EigenvalueRecord eigen_from_json(const nlohmann::json& j)
    {
      EigenvalueRecord r;
      r.kind = j.at("kind").get<std::string>();
      r.value = opt_string(j, "value");
      r.rootOrder = opt_string(j, "rootOrder");
      r.radicand = opt_string(j, "radicand");
      r.phase = opt_string(j, "phase");
      r.multiplicity = j.at("multiplicity").get<std::string>();
      r.display = opt_string(j, "display");
      return r;
    }
  }

  ReportDocument make_document(const ConjectureReport& report, std::optional<long long> timingMs)
  {
    ReportDocument doc;
    const auto& ci = report.instance;
    doc.dim = std::to_string(ci.dim());
    for (int d : ci.degrees())
      doc.degrees.push_back(std::to_string(d));
    doc.rho = std::to_string(fano_index(ci));
    doc.bigD = to_string(power_product(ci));
    doc.bigF = to_string(factorial_product(ci));

    if (report.spectrum) {
      const auto& s = *report.spectrum;
      doc.euler = to_string(s.euler);
      doc.primitiveDim = to_string(s.primitiveDim);
      for (const auto& e : s.ambient)
        doc.ambient.push_back(record_of(e));
      if (s.primitive)
        doc.primitive.push_back(record_of(*s.primitive));
      if (s.lambda)
        doc.lambda = to_string(*s.lambda);
      if (s.radius.is_integer_form()) {
        doc.tKind = "integer";
        doc.tValue = to_string(s.radius.integer_form());
      } else {
        doc.tKind = "root_scaled";
        doc.tRootOrder = std::to_string(s.radius.root_pair().rho);
        doc.tRadicand = to_string(s.radius.root_pair().radicand);
      }
      doc.tDisplay = s.radius.to_string();
      doc.assumptions = s.assumptions;
    }

    doc.conjOMultiplicityOne = report.conjO.multiplicityOne;
    doc.tMultiplicity = to_string(report.conjO.tMultiplicity);
    doc.circleCount = to_string(report.conjO.circleCount);
    doc.conjORootsOfUnity = report.conjO.rootsOfUnity;
    for (const auto& c : report.conjO.circle)
      doc.circle.push_back({c.value.to_string(), to_string(c.multiplicity), c.turn.to_string(),
                            c.rootOfUnity});
    doc.galkinStrict = report.galkin.strict;
    doc.galkinLhs = to_string(report.galkin.lhs);
    doc.galkinRhs = to_string(report.galkin.rhs);
    doc.galkinExponent = std::to_string(report.galkin.exponent);
    doc.lambdaApplicable = report.lambdaApplicable;
    doc.lambdaConsistent = report.lambdaConsistent;
    doc.diagnostic = report.diagnostic;
    if (timingMs)
      doc.timingMs = std::to_string(*timingMs);
    return doc;
  }

  nlohmann::ordered_json to_json(const ReportDocument& doc)
  {
    nlohmann::ordered_json j;
    j["schemaVersion"] = doc.schemaVersion;
    j["instance"] = {{"N", doc.dim},
                     {"degrees", doc.degrees},
                     {"rho", doc.rho},
                     {"D", doc.bigD},
                     {"F", doc.bigF},
                     {"euler", doc.euler},
                     {"primitiveDim", doc.primitiveDim}};

    auto ambient = nlohmann::ordered_json::array();
    for (const auto& r : doc.ambient)
      ambient.push_back(eigen_json(r));
    auto primitive = nlohmann::ordered_json::array();
    for (const auto& r : doc.primitive)
      primitive.push_back(eigen_json(r));
    j["spectrum"] = {{"ambient", ambient}, {"primitive", primitive}};

    j["lambda"] = doc.lambda ? nlohmann::ordered_json(*doc.lambda) : nlohmann::ordered_json(nullptr);

    nlohmann::ordered_json t;
    t["kind"] = doc.tKind;
    if (doc.tKind == "integer")
      t["value"] = doc.tValue;
    else if (doc.tKind == "root_scaled") {
      t["rootOrder"] = doc.tRootOrder;
      t["radicand"] = doc.tRadicand;
    }
    t["display"] = doc.tDisplay;
    j["T"] = t;

    auto circle = nlohmann::ordered_json::array();
    for (const auto& c : doc.circle)
      circle.push_back({{"eigenvalue", c.eigenvalue},
                        {"multiplicity", c.multiplicity},
                        {"turn", c.turn},
                        {"rootOfUnity", c.rootOfUnity}});
    nlohmann::ordered_json verdicts;
    verdicts["conjO_multiplicity_one"] = {{"pass", doc.conjOMultiplicityOne},
                                          {"tMultiplicity", doc.tMultiplicity},
                                          {"circleCount", doc.circleCount}};
    verdicts["conjO_roots_of_unity"] = {{"pass", doc.conjORootsOfUnity}, {"circle", circle}};
    verdicts["galkin_strict"] = {{"pass", doc.galkinStrict},
                                 {"lhs", doc.galkinLhs},
                                 {"rhs", doc.galkinRhs},
                                 {"exponent", doc.galkinExponent}};
    verdicts["lambda_consistent"] = {{"pass", doc.lambdaConsistent},
                                     {"applicable", doc.lambdaApplicable}};
    j["verdicts"] = verdicts;
    j["assumptions"] = doc.assumptions;
    j["diagnostic"] = doc.diagnostic;
    j["timing_ms"] = doc.timingMs ? nlohmann::ordered_json(*doc.timingMs)
                                  : nlohmann::ordered_json(nullptr);
    return j;
  }

  ReportDocument document_from_json(const nlohmann::json& j)
  {
    try {
      ReportDocument doc;
      doc.schemaVersion = j.at("schemaVersion").get<std::string>();
      if (doc.schemaVersion != kSchemaVersion)
        throw std::invalid_argument("unsupported schema version '" + doc.schemaVersion + "'");

      const auto& inst = j.at("instance");
      doc.dim = inst.at("N").get<std::string>();
      doc.degrees = inst.at("degrees").get<std::vector<std::string>>();
      doc.rho = inst.at("rho").get<std::string>();
      doc.bigD = inst.at("D").get<std::string>();
      doc.bigF = inst.at("F").get<std::string>();
      doc.euler = inst.at("euler").get<std::string>();
      doc.primitiveDim = inst.at("primitiveDim").get<std::string>();

      for (const auto& r : j.at("spectrum").at("ambient"))
        doc.ambient.push_back(eigen_from_json(r));
      for (const auto& r : j.at("spectrum").at("primitive"))
        doc.primitive.push_back(eigen_from_json(r));
      if (!j.at("lambda").is_null())
        doc.lambda = j.at("lambda").get<std::string>();

      const auto& t = j.at("T");
      doc.tKind = t.at("kind").get<std::string>();
      doc.tValue = opt_string(t, "value");
      doc.tRootOrder = opt_string(t, "rootOrder");
      doc.tRadicand = opt_string(t, "radicand");
      doc.tDisplay = opt_string(t, "display");

      const auto& v = j.at("verdicts");
      doc.conjOMultiplicityOne = v.at("conjO_multiplicity_one").at("pass").get<bool>();
      doc.tMultiplicity = v.at("conjO_multiplicity_one").at("tMultiplicity").get<std::string>();
      doc.circleCount = v.at("conjO_multiplicity_one").at("circleCount").get<std::string>();
      doc.conjORootsOfUnity = v.at("conjO_roots_of_unity").at("pass").get<bool>();
      for (const auto& c : v.at("conjO_roots_of_unity").at("circle"))
        doc.circle.push_back({c.at("eigenvalue").get<std::string>(),
                              c.at("multiplicity").get<std::string>(),
                              c.at("turn").get<std::string>(),
                              c.at("rootOfUnity").get<bool>()});
      doc.galkinStrict = v.at("galkin_strict").at("pass").get<bool>();
      doc.galkinLhs = v.at("galkin_strict").at("lhs").get<std::string>();
      doc.galkinRhs = v.at("galkin_strict").at("rhs").get<std::string>();
      doc.galkinExponent = v.at("galkin_strict").at("exponent").get<std::string>();
      doc.lambdaConsistent = v.at("lambda_consistent").at("pass").get<bool>();
      doc.lambdaApplicable = v.at("lambda_consistent").at("applicable").get<bool>();

      doc.assumptions = j.at("assumptions").get<std::vector<std::string>>();
      doc.diagnostic = j.at("diagnostic").get<std::string>();
      if (!j.at("timing_ms").is_null())
        doc.timingMs = j.at("timing_ms").get<std::string>();
      return doc;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed report document: ") + e.what());
    }
  }

  std::vector<std::string> csv_header(bool withTiming)
  {
    std::vector<std::string> h = {
      "N", "degrees", "rho", "D", "F", "euler", "primitiveDim", "lambda", "T",
      "ambient", "primitive", "conjO_multiplicity_one", "T_multiplicity", "circle_count",
      "conjO_roots_of_unity", "galkin_strict", "galkin_lhs", "galkin_rhs", "galkin_exponent",
      "lambda_consistent", "diagnostic"};
    if (withTiming)
      h.push_back("timing_ms");
    return h;
  }

  std::string csv_escape(const std::string& field)
  {
    if (field.find_first_of(",\"\n\r") == std::string::npos)
      return field;
    std::string out = "\"";
    for (char c : field) {
      if (c == '"')
        out += '"';
      out += c;
    }
    return out + '"';
  }

  std::string csv_row(const ReportDocument& doc, bool withTiming)
  {
    std::vector<std::string> f = {
      doc.dim, join(doc.degrees, ";"), doc.rho, doc.bigD, doc.bigF, doc.euler, doc.primitiveDim,
      doc.lambda.value_or(""), doc.tDisplay, spectrum_text(doc.ambient),
      spectrum_text(doc.primitive), bool_text(doc.conjOMultiplicityOne), doc.tMultiplicity,
      doc.circleCount, bool_text(doc.conjORootsOfUnity), bool_text(doc.galkinStrict),
      doc.galkinLhs, doc.galkinRhs, doc.galkinExponent, bool_text(doc.lambdaConsistent),
      doc.diagnostic};
    if (withTiming)
      f.push_back(doc.timingMs.value_or(""));
    for (auto& x : f)
      x = csv_escape(x);
    return join(f, ",");
  }

  std::string render_text(const ReportDocument& doc)
  {
    std::ostringstream os;
    auto line = [&](const std::string& key, const std::string& value) {
      os << std::left << std::setw(24) << key << value << '\n';
    };
    line("instance", "X_" + doc.dim + "(" + join(doc.degrees, ",") + ")");
    line("fano index rho", doc.rho);
    line("D = prod d^d", doc.bigD);
    line("F = prod d!", doc.bigF);
    line("euler characteristic", doc.euler);
    line("primitive dimension", doc.primitiveDim);
    line("ambient spectrum", spectrum_text(doc.ambient));
    line("primitive spectrum", doc.primitive.empty() ? "(none)" : spectrum_text(doc.primitive));
    line("lambda", doc.lambda.value_or("n/a"));
    line("spectral radius T", doc.tDisplay);
    line("O(1) T simple", bool_text(doc.conjOMultiplicityOne) + " (multiplicity of T = "
                          + doc.tMultiplicity + ", on circle = " + doc.circleCount + ")");
    std::vector<std::string> turns;
    for (const auto& c : doc.circle)
      turns.push_back(c.eigenvalue + " @ " + c.turn);
    line("O(2) roots of unity", bool_text(doc.conjORootsOfUnity) + " (" + join(turns, ", ") + ")");
    line("Galkin T > N+1", bool_text(doc.galkinStrict) + " (" + doc.galkinLhs + " > "
                           + doc.galkinRhs + ", exponent " + doc.galkinExponent + ")");
    line("lambda consistent", bool_text(doc.lambdaConsistent)
                              + (doc.lambdaApplicable ? "" : " (not applicable)"));
    for (const auto& a : doc.assumptions)
      line("assumption", a);
    if (!doc.diagnostic.empty())
      line("diagnostic", doc.diagnostic);
    if (doc.timingMs)
      line("timing ms", *doc.timingMs);
    line("result", doc.passed() ? "PASS" : "FAIL");
    return os.str();
  }

  std::string render_table(const std::vector<ReportDocument>& docs, bool withTiming)
  {
    std::vector<std::string> header = {"instance", "rho", "euler", "N'", "lambda", "T",
                                       "O(1)", "O(2)", "Galkin", "lambda ok", "result"};
    if (withTiming)
      header.push_back("ms");
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : docs) {
      std::vector<std::string> row = {
        "X_" + d.dim + "(" + join(d.degrees, ",") + ")", d.rho, d.euler, d.primitiveDim,
        d.lambda.value_or("-"), d.tDisplay, bool_text(d.conjOMultiplicityOne),
        bool_text(d.conjORootsOfUnity), bool_text(d.galkinStrict),
        d.lambdaApplicable ? bool_text(d.lambdaConsistent) : "-", d.passed() ? "PASS" : "FAIL"};
      if (withTiming)
        row.push_back(d.timingMs.value_or(""));
      rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      width[c] = header[c].size();
      for (const auto& r : rows)
        width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& r) {
      for (std::size_t c = 0; c + 1 < r.size(); ++c)
        os << std::left << std::setw(static_cast<int>(width[c])) << r[c] << "  ";
      os << r.back();
      os << '\n';
    };
    emit(header);
    for (const auto& r : rows)
      emit(r);
    return os.str();
  }

} // namespace qspec
