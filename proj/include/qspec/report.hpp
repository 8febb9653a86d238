#ifndef QSPEC_REPORT_HPP
#define QSPEC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <qspec/conjectures.hpp>

namespace qspec {

  inline constexpr const char* kSchemaVersion = "qspec-ci/1";

  // Serialized view of a ConjectureReport. Every number is a decimal string
  // so that D, F and the Euler characteristic survive any JSON consumer.

  struct EigenvalueRecord {
    std::string kind;          // "integer" | "root_scaled"
    std::string value;         // integer kind
    std::string rootOrder;     // root_scaled kind
    std::string radicand;
    std::string phase;
    std::string multiplicity;
    std::string display;

    bool operator==(const EigenvalueRecord&) const = default;
  };

  struct CircleRecord {
    std::string eigenvalue;
    std::string multiplicity;
    std::string turn;
    bool rootOfUnity = false;

    bool operator==(const CircleRecord&) const = default;
  };

  struct ReportDocument {
    std::string schemaVersion = kSchemaVersion;

    std::string dim;
    std::vector<std::string> degrees;
    std::string rho;
    std::string bigD;
    std::string bigF;
    std::string euler;
    std::string primitiveDim;

    std::vector<EigenvalueRecord> ambient;
    std::vector<EigenvalueRecord> primitive;
    std::optional<std::string> lambda;

    std::string tKind;         // "integer" | "root_scaled" | "" (pipeline failed)
    std::string tValue;
    std::string tRootOrder;
    std::string tRadicand;
    std::string tDisplay;

    bool conjOMultiplicityOne = false;
    std::string tMultiplicity;
    std::string circleCount;
    bool conjORootsOfUnity = false;
    std::vector<CircleRecord> circle;
    bool galkinStrict = false;
    std::string galkinLhs;
    std::string galkinRhs;
    std::string galkinExponent;
    bool lambdaApplicable = false;
    bool lambdaConsistent = false;

    std::vector<std::string> assumptions;
    std::string diagnostic;
    std::optional<std::string> timingMs;

    bool passed() const
    {
      return conjOMultiplicityOne && conjORootsOfUnity && galkinStrict && lambdaConsistent;
    }

    bool operator==(const ReportDocument&) const = default;
  };

  ReportDocument make_document(const ConjectureReport& report,
                               std::optional<long long> timingMs = std::nullopt);

  nlohmann::ordered_json to_json(const ReportDocument& doc);
  // Throws std::invalid_argument on a schema version mismatch or a missing
  // required field.
  ReportDocument document_from_json(const nlohmann::json& j);

  std::vector<std::string> csv_header(bool withTiming);
  std::string csv_row(const ReportDocument& doc, bool withTiming);
  std::string csv_escape(const std::string& field);

  // Multi-line, human-first rendering of one document.
  std::string render_text(const ReportDocument& doc);
  // Aligned table, one line per document.
  std::string render_table(const std::vector<ReportDocument>& docs, bool withTiming);

} // namespace qspec

#endif // QSPEC_REPORT_HPP
