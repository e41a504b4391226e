#include "jacobsthal/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace jacobsthal {

std::string_view to_string(RowKind k) {
  switch (k) {
    case RowKind::sequence: return "sequence";
    case RowKind::identity: return "identity";
    case RowKind::sum: return "sum";
    case RowKind::verdict: return "verdict";
  }
  return "?";
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "plain") return Format::plain;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

ReportRow::ReportRow(Payload p) : payload_(std::move(p)) {}

RowKind ReportRow::kind() const { return static_cast<RowKind>(payload_.index()); }

namespace {

struct SortKey {
  RowKind kind;
  int group;
  Index n;
  Index k;
  int variant;

  friend auto operator<=>(const SortKey&, const SortKey&) = default;
};

SortKey sort_key(const ReportRow& row) {
  return std::visit(
      [&](const auto& p) -> SortKey {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SequenceRow>) {
          return {row.kind(), 0, p.n, 0, 0};
        } else if constexpr (std::is_same_v<T, IdentityResult>) {
          return {row.kind(), static_cast<int>(p.id), p.n, p.k.value_or(0), 0};
        } else if constexpr (std::is_same_v<T, SumRow>) {
          return {row.kind(), static_cast<int>(p.enclosure.spec.family), p.enclosure.spec.start,
                  0, 0};
        } else {
          return {row.kind(), static_cast<int>(p.theorem), p.n, 0, static_cast<int>(p.variant)};
        }
      },
      row.payload());
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

// Keys are written in insertion order.
class JsonObject {
 public:
  JsonObject& raw(std::string_view key, std::string_view json) {
    buf_ += first_ ? "{" : ",";
    first_ = false;
    buf_ += json_string(key);
    buf_ += ":";
    buf_ += json;
    return *this;
  }
  JsonObject& str(std::string_view key, std::string_view v) { return raw(key, json_string(v)); }
  JsonObject& num(std::string_view key, const Integer& v) { return raw(key, v.get_str(10)); }
  JsonObject& num(std::string_view key, const std::optional<Integer>& v) {
    return v ? num(key, *v) : raw(key, "null");
  }
  JsonObject& boolean(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }

  std::string done() const { return first_ ? "{}" : buf_ + "}"; }

 private:
  std::string buf_;
  bool first_ = true;
};

std::string interval_json(const std::optional<RatInterval>& iv) {
  if (!iv) return "null";
  return JsonObject().str("lo", iv->lo().str()).str("hi", iv->hi().str()).done();
}

std::string row_json(const ReportRow& row) {
  JsonObject obj;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SequenceRow>) {
          obj.num("n", Integer(p.n)).num("x", p.x).num("value", p.value);
        } else if constexpr (std::is_same_v<T, IdentityResult>) {
          obj.str("identity", identity_name(p.id)).num("n", Integer(p.n));
          obj.num("k", p.k ? std::optional<Integer>(Integer(*p.k)) : std::nullopt);
          obj.str("relation", to_string(p.relation))
              .str("result", to_string(p.outcome))
              .str("lhs", p.lhs.str())
              .str("rhs", p.rhs.str());
        } else if constexpr (std::is_same_v<T, SumRow>) {
          obj.str("family", to_string(p.enclosure.spec.family))
              .num("start", Integer(p.enclosure.spec.start))
              .str("status", p.goal_met ? "met" : "cap-reached")
              .raw("enclosure", enclosure_json(p.enclosure));
          if (p.decide) {
            obj.str("decide", to_string(*p.decide));
          } else {
            obj.raw("decide", "null");
          }
          obj.raw("inverse", interval_json(p.inverse)).num("decided", p.decided);
        } else {
          obj.str("theorem", to_string(p.theorem))
              .str("variant", to_string(p.variant))
              .num("n", Integer(p.n))
              .str("status", to_string(p.status))
              .num("decided", p.decided)
              .num("expected", p.expected);
          if (p.enclosure) {
            obj.raw("enclosure", enclosure_json(*p.enclosure))
                .str("series", to_string(p.enclosure->spec.family));
          } else {
            obj.raw("enclosure", "null").raw("series", "null");
          }
          obj.raw("inverse", interval_json(p.inverse))
              .boolean("discrepancy", p.discrepancy)
              .str("note", p.note);
        }
      },
      row.payload());
  obj.str("kind", to_string(row.kind())).str("schema", kSchemaVersion);
  return obj.done();
}

std::vector<std::string> header(RowKind kind) {
  switch (kind) {
    case RowKind::sequence: return {"kind", "n", "x", "value"};
    case RowKind::identity:
      return {"kind", "identity", "n", "k", "result", "relation", "lhs", "rhs"};
    case RowKind::sum:
      return {"kind",   "family", "start",   "status",     "terms",     "lo",
              "hi",     "decide", "decided", "inverse_lo", "inverse_hi"};
    case RowKind::verdict:
      return {"kind",   "theorem", "variant",    "n",          "status",
              "decided", "expected", "series",   "terms",      "lo",
              "hi",     "inverse_lo", "inverse_hi", "discrepancy", "note"};
  }
  return {};
}

// Plain text shortens long exact rationals to a decimal approximation.
std::string show(const Rat& r, bool plain) {
  const std::string exact = r.str();
  if (!plain || exact.size() <= 32) return exact;
  mpf_class f(r.raw(), 128);
  char* text = nullptr;
  gmp_asprintf(&text, "~%.15Fe", f.get_mpf_t());
  std::string out(text);
  void (*free_fn)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(text, out.size() + 1);
  return out;
}

std::string opt(const std::optional<Integer>& z) { return z ? z->get_str(10) : ""; }

std::vector<std::string> row_cells(const ReportRow& row, bool plain) {
  std::vector<std::string> cells{std::string(to_string(row.kind()))};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SequenceRow>) {
          cells.insert(cells.end(), {std::to_string(p.n), p.x.get_str(10), p.value.get_str(10)});
        } else if constexpr (std::is_same_v<T, IdentityResult>) {
          cells.insert(cells.end(),
                       {std::string(identity_name(p.id)), "n=" + std::to_string(p.n),
                        p.k ? "k=" + std::to_string(*p.k) : std::string("k="),
                        std::string(to_string(p.outcome)), std::string(to_string(p.relation)),
                        show(p.lhs, plain), show(p.rhs, plain)});
        } else if constexpr (std::is_same_v<T, SumRow>) {
          const auto& e = p.enclosure;
          cells.insert(cells.end(),
                       {std::string(to_string(e.spec.family)), std::to_string(e.spec.start),
                        p.goal_met ? "met" : "cap-reached", std::to_string(e.terms),
                        show(e.interval.lo(), plain), show(e.interval.hi(), plain),
                        p.decide ? std::string(to_string(*p.decide)) : "", opt(p.decided),
                        p.inverse ? show(p.inverse->lo(), plain) : "",
                        p.inverse ? show(p.inverse->hi(), plain) : ""});
        } else {
          const auto& e = p.enclosure;
          cells.insert(cells.end(),
                       {std::string(to_string(p.theorem)), std::string(to_string(p.variant)),
                        std::to_string(p.n), std::string(to_string(p.status)), opt(p.decided),
                        opt(p.expected), e ? std::string(to_string(e->spec.family)) : "",
                        e ? std::to_string(e->terms) : "",
                        e ? show(e->interval.lo(), plain) : "",
                        e ? show(e->interval.hi(), plain) : "",
                        p.inverse ? show(p.inverse->lo(), plain) : "",
                        p.inverse ? show(p.inverse->hi(), plain) : "",
                        p.discrepancy ? "true" : "false", p.note});
        }
      },
      row.payload());
  return cells;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << csv_cell(cells[i]);
  }
  out << '\n';
}

}  // namespace

void sort_rows(std::vector<ReportRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return sort_key(a) < sort_key(b);
  });
}

std::string enclosure_json(const Enclosure& e) {
  return JsonObject()
      .str("lo", e.interval.lo().str())
      .str("hi", e.interval.hi().str())
      .num("terms", Integer(e.terms))
      .done();
}

void emit_report(std::ostream& out, RowKind kind, const std::vector<ReportRow>& rows,
                 Format format) {
  for (const auto& row : rows) {
    if (row.kind() != kind) {
      throw std::invalid_argument("emit_report: mixed row kinds");
    }
  }
  switch (format) {
    case Format::json: {
      out << '[';
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << ',';
        out << row_json(rows[i]);
      }
      out << "]\n";
      return;
    }
    case Format::csv: {
      write_csv_line(out, header(kind));
      for (const auto& row : rows) write_csv_line(out, row_cells(row, false));
      return;
    }
    case Format::plain: {
      std::vector<std::vector<std::string>> table{header(kind)};
      for (const auto& row : rows) table.push_back(row_cells(row, true));
      std::vector<std::size_t> width(table.front().size(), 0);
      for (const auto& line : table) {
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
      }
      for (const auto& line : table) {
        std::string text;
        for (std::size_t i = 0; i < line.size(); ++i) {
          if (i) text += "  ";
          text += line[i];
          if (i + 1 < line.size()) text.append(width[i] - line[i].size(), ' ');
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out << text << '\n';
      }
      return;
    }
  }
}

}  // namespace jacobsthal
