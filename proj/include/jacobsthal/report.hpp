#pragma once

// Machine-readable reports: JSON (one array, fixed key order), CSV (fixed
// header per row kind) and aligned plain text. Rationals are written as
// "p/q" strings and integers as exact decimal digits; JSON and CSV never
// contain floating point.

#include <iosfwd>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "jacobsthal/identities.hpp"
#include "jacobsthal/series.hpp"
#include "jacobsthal/theorems.hpp"

namespace jacobsthal {

inline constexpr std::string_view kSchemaVersion = "1";

enum class RowKind { sequence, identity, sum, verdict };
enum class Format { json, csv, plain };

std::string_view to_string(RowKind k);
Format parse_format(std::string_view text);

struct SequenceRow {
  Index n;
  Integer x;
  Integer value;
};

struct SumRow {
  Enclosure enclosure;
  bool goal_met;
  std::optional<Rounding> decide;
  std::optional<RatInterval> inverse;
  std::optional<Integer> decided;
};

struct ReportRow {
  using Payload = std::variant<SequenceRow, IdentityResult, SumRow, Verdict>;

  explicit ReportRow(Payload p);

  RowKind kind() const;
  const Payload& payload() const { return payload_; }

 private:
  Payload payload_;
};

/// Orders rows by (kind, theorem or identity, n, k, variant).
void sort_rows(std::vector<ReportRow>& rows);

/// Writes rows of a single kind. `kind` selects the CSV/plain header, so an
/// empty report is still well formed.
void emit_report(std::ostream& out, RowKind kind, const std::vector<ReportRow>& rows,
                 Format format);

/// {"lo": "p/q", "hi": "p/q", "terms": K}
std::string enclosure_json(const Enclosure& e);

}  // namespace jacobsthal
