#include "qrsum/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrsum/charsums.hpp"
#include "qrsum/counting.hpp"
#include "qrsum/error.hpp"
#include "qrsum/finite_field.hpp"
#include "qrsum/oracle.hpp"

namespace qrsum::cli {

namespace {

using Record = nlohmann::ordered_json;

constexpr double kGaussTolerance = 1e-6;

struct FieldFlags {
  std::uint64_t p = 0;
  unsigned s = 1;
  std::string modulus;
  bool json = false;
  std::uint64_t budget = OracleBudget{}.max_states;
};

void add_field_flags(CLI::App& cmd, FieldFlags& flags) {
  cmd.add_option("--p", flags.p, "odd prime characteristic")->required();
  cmd.add_option("--s", flags.s, "extension degree")->capture_default_str();
  cmd.add_option("--modulus", flags.modulus, "monic modulus c0,c1,...,1 (constant term first)");
  cmd.add_flag("--json", flags.json, "emit JSON lines");
  cmd.add_option("--budget", flags.budget, "oracle state budget")->capture_default_str();
}

FieldSpec make_field(const FieldFlags& flags) {
  std::optional<std::vector<Residue>> modulus;
  if (!flags.modulus.empty()) {
    std::vector<Residue> coeffs;
    std::stringstream ss(flags.modulus);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        coeffs.push_back(std::stoull(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad modulus coefficient '" + part + "'");
      }
    }
    modulus = std::move(coeffs);
  }
  FieldSpec F = build_field(flags.p, flags.s, modulus);
  const auto q = F.q_u64();
  if (!q || *q > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw Error(ErrorCode::InvalidArgument, "q = " + to_decimal(F.q()) + " is too large");
  }
  return F;
}

// Aligned text table, or one JSON object per line.
class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}
  ~Emitter() { flush(); }

  void row(const Record& rec) {
    if (json_) {
      out_ << rec.dump() << '\n';
      return;
    }
    if (header_.empty()) {
      for (const auto& item : rec.items()) header_.push_back(item.key());
    }
    std::vector<std::string> cells;
    for (const auto& key : header_) cells.push_back(rec.contains(key) ? text(rec.at(key)) : "");
    rows_.push_back(std::move(cells));
  }

  void summary(const Record& rec) {
    if (json_) {
      out_ << rec.dump() << '\n';
      return;
    }
    flush();
    out_ << "#";
    for (const auto& item : rec.items()) out_ << ' ' << item.key() << '=' << text(item.value());
    out_ << '\n';
  }

  void flush() {
    if (rows_.empty()) return;
    std::vector<std::size_t> width(header_.size(), 0);
    auto measure = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], display_width(cells[i]));
    };
    measure(header_);
    for (const auto& r : rows_) measure(r);
    auto print = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out_ << cells[i];
        if (i + 1 < cells.size()) out_ << std::string(width[i] - display_width(cells[i]) + 2, ' ');
      }
      out_ << '\n';
    };
    print(header_);
    for (const auto& r : rows_) print(r);
    rows_.clear();
    header_.clear();
  }

 private:
  static std::string text(const Record& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
  }

  // Counts code points, so the UTF-8 in ring values lines up.
  static std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  }

  std::ostream& out_;
  bool json_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

Record base_record(const FieldSpec& F, unsigned k, const FieldElement& b, const std::string& quantity) {
  Record rec;
  rec["p"] = F.p();
  rec["s"] = F.s();
  rec["q"] = *F.q_u64();
  rec["k"] = k;
  rec["b"] = format_element(b, F);
  rec["quantity"] = quantity;
  return rec;
}

enum class Quantity { subset, distinct, diagonal };

Quantity parse_quantity(const std::string& text) {
  if (text == "subset") return Quantity::subset;
  if (text == "distinct") return Quantity::distinct;
  if (text == "diagonal") return Quantity::diagonal;
  throw Error(ErrorCode::ParseError, "unknown quantity '" + text + "'");
}

CountResult closed_count(Quantity quantity, unsigned k, std::span<const FieldElement> coeffs,
                         const FieldElement& b, const FieldSpec& F) {
  switch (quantity) {
    case Quantity::subset: return n_H(k, b, F);
    case Quantity::distinct: return n_tilde_star(k, b, F);
    case Quantity::diagonal: return n_star(coeffs, b, F);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown quantity");
}

CountTable oracle_table(Quantity quantity, unsigned k, std::span<const FieldElement> coeffs,
                        const FieldSpec& F, OracleBudget budget) {
  switch (quantity) {
    case Quantity::subset: return oracle_subset_table(k, F, budget);
    case Quantity::distinct: return oracle_distinct_table(k, F, budget);
    case Quantity::diagonal: return oracle_diagonal_table(coeffs, F, budget);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown quantity");
}

struct CountFlags {
  FieldFlags field;
  unsigned k = 0;
  std::string b = "0";
  std::string quantity = "subset";
  std::string method = "closed_form";
  std::vector<std::string> coeffs;
};

int cmd_count(const CountFlags& flags, std::ostream& out, std::ostream& err) {
  const FieldSpec F = make_field(flags.field);
  const Quantity quantity = parse_quantity(flags.quantity);
  const FieldElement b = parse_element(flags.b, F);
  std::vector<FieldElement> coeffs;
  for (const auto& c : flags.coeffs) coeffs.push_back(parse_element(c, F));
  if (quantity == Quantity::diagonal && coeffs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "--quantity diagonal needs --coeffs");
  }
  const unsigned k = quantity == Quantity::diagonal ? static_cast<unsigned>(coeffs.size()) : flags.k;
  if (flags.method != "closed_form" && flags.method != "oracle" && flags.method != "both") {
    throw Error(ErrorCode::ParseError, "unknown method '" + flags.method + "'");
  }

  Record rec = base_record(F, k, b, flags.quantity);
  if (quantity == Quantity::diagonal) {
    Record list = Record::array();
    for (const auto& c : coeffs) list.push_back(format_element(c, F));
    rec["coeffs"] = list;
  }

  std::optional<CountResult> closed;
  std::optional<Integer> oracle;
  if (flags.method != "oracle") closed = closed_count(quantity, k, coeffs, b, F);
  if (flags.method != "closed_form") {
    oracle = oracle_table(quantity, k, coeffs, F, {flags.field.budget})[element_index(b, F)];
  }

  rec["count"] = to_decimal(closed ? closed->value : *oracle);
  rec["method"] = flags.method;
  rec["branch"] = closed ? closed->provenance : "oracle";
  bool ok = true;
  if (closed && oracle) {
    ok = closed->value == *oracle;
    rec["oracle_count"] = to_decimal(*oracle);
    rec["match"] = ok;
    if (!ok) {
      err << "mismatch: closed form " << to_decimal(closed->value) << " (" << closed->provenance
          << ") vs oracle " << to_decimal(*oracle) << '\n';
    }
  }
  Emitter emit(out, flags.field.json);
  emit.row(rec);
  return ok ? kOk : kMismatch;
}

struct TableFlags {
  FieldFlags field;
  unsigned k = 0;
  std::string method = "closed_form";
};

int cmd_table(const TableFlags& flags, std::ostream& out, std::ostream& err) {
  const FieldSpec F = make_field(flags.field);
  if (flags.method != "closed_form" && flags.method != "oracle") {
    throw Error(ErrorCode::ParseError, "table method must be closed_form or oracle");
  }
  if (Integer(flags.k) > (F.q() - 1) / 2) {
    throw Error(ErrorCode::KOutOfRange, "k exceeds (q-1)/2");
  }
  const auto elements = enumerate_elements(F);
  CountTable oracle;
  if (flags.method == "oracle") oracle = oracle_subset_table(flags.k, F, {flags.field.budget});

  Emitter emit(out, flags.field.json);
  Integer total = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Record rec = base_record(F, flags.k, elements[i], "subset");
    if (flags.method == "oracle") {
      rec["count"] = to_decimal(oracle[i]);
      rec["method"] = "oracle";
      rec["branch"] = "oracle";
      total += oracle[i];
    } else {
      const CountResult r = n_H(flags.k, elements[i], F);
      rec["count"] = to_decimal(r.value);
      rec["method"] = "closed_form";
      rec["branch"] = r.provenance;
      total += r.value;
    }
    emit.row(rec);
  }
  const Integer expected = binomial((F.q() - 1) / 2, flags.k);
  const bool ok = total == expected;
  Record summary;
  summary["summary"] = "table";
  summary["total"] = to_decimal(total);
  summary["expected"] = to_decimal(expected);
  summary["ok"] = ok;
  emit.summary(summary);
  if (!ok) err << "table total " << to_decimal(total) << " != C((q-1)/2, k) = " << to_decimal(expected) << '\n';
  return ok ? kOk : kMismatch;
}

struct VerifyFlags {
  FieldFlags field;
  unsigned max_k = 6;
  std::string quantity = "subset";
};

int cmd_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
  const FieldSpec F = make_field(flags.field);
  const Quantity quantity = parse_quantity(flags.quantity);
  if (quantity == Quantity::diagonal) {
    throw Error(ErrorCode::InvalidArgument, "verify supports subset and distinct");
  }
  const Integer k_limit = quantity == Quantity::subset ? Integer((F.q() - 1) / 2) : Integer(F.q() - 1);
  const unsigned max_k = Integer(flags.max_k) < k_limit ? flags.max_k : static_cast<unsigned>(k_limit.get_ui());
  const auto elements = enumerate_elements(F);

  Emitter emit(out, flags.field.json);
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  for (unsigned k = 0; k <= max_k; ++k) {
    const CountTable oracle = oracle_table(quantity, k, {}, F, {flags.field.budget});
    for (std::size_t i = 0; i < elements.size(); ++i) {
      Record rec = base_record(F, k, elements[i], flags.quantity);
      ++checked;
      try {
        const CountResult r = closed_count(quantity, k, {}, elements[i], F);
        const bool ok = r.value == oracle[i];
        rec["count"] = to_decimal(r.value);
        rec["method"] = "both";
        rec["branch"] = r.provenance;
        rec["oracle_count"] = to_decimal(oracle[i]);
        rec["match"] = ok;
        if (!ok) {
          ++mismatches;
          err << "mismatch k=" << k << " b=" << format_element(elements[i], F) << ": closed form "
              << to_decimal(r.value) << " (" << r.provenance << ") vs oracle " << to_decimal(oracle[i])
              << '\n';
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ConsistencyFailure) throw;
        ++mismatches;
        rec["count"] = "";
        rec["method"] = "both";
        rec["branch"] = "inconsistent";
        rec["oracle_count"] = to_decimal(oracle[i]);
        rec["match"] = false;
        err << "mismatch k=" << k << " b=" << format_element(elements[i], F) << ": " << e.what()
            << "; oracle " << to_decimal(oracle[i]) << '\n';
      }
      emit.row(rec);
    }
  }
  Record summary;
  summary["summary"] = "verify";
  summary["checked"] = checked;
  summary["mismatches"] = mismatches;
  summary["ok"] = mismatches == 0;
  emit.summary(summary);
  return mismatches == 0 ? kOk : kMismatch;
}

struct GaussFlags {
  FieldFlags field;
  std::string a = "1";
};

Record complex_record(std::complex<double> z) { return Record::array({z.real(), z.imag()}); }

int cmd_gauss(const GaussFlags& flags, std::ostream& out) {
  const FieldSpec F = make_field(flags.field);
  const FieldElement a = parse_element(flags.a, F);
  const GaussValue g = gauss_closed(F);
  // G_a = chi(a) G for a != 0, and 0 for a = 0.
  const QuadExact closed = g.value * Rational(quadratic_character(a, F));

  Record rec;
  rec["sum"] = "gauss";
  rec["p"] = F.p();
  rec["s"] = F.s();
  rec["q"] = *F.q_u64();
  rec["a"] = format_element(a, F);
  rec["case"] = g.case_label;
  rec["closed"] = to_string(closed);
  const auto approx = embed_complex(closed);
  rec["approx"] = complex_record(approx);
  bool ok = true;
  if (*F.q_u64() <= std::min<std::uint64_t>(flags.field.budget, kDefaultEnumerationCap)) {
    const auto direct = gauss_direct(a, F);
    ok = std::abs(direct - approx) <= kGaussTolerance;
    rec["direct"] = complex_record(direct);
    rec["match"] = ok;
  }
  Emitter emit(out, flags.field.json);
  emit.row(rec);
  return ok ? kOk : kMismatch;
}

struct JacobiFlags {
  FieldFlags field;
  unsigned e = 1;
  unsigned trivial = 0;
  std::string variant = "J";
};

int cmd_jacobi(const JacobiFlags& flags, std::ostream& out) {
  const FieldSpec F = make_field(flags.field);
  const JacobiVariant variant = parse_jacobi_variant(flags.variant);
  std::vector<CharKind> slots(flags.trivial, CharKind::trivial);
  slots.insert(slots.end(), flags.e, CharKind::quadratic);
  if (slots.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one character slot");

  const Integer closed = jacobi_specialize(slots, variant, F);
  Record rec;
  rec["sum"] = "jacobi";
  rec["p"] = F.p();
  rec["s"] = F.s();
  rec["q"] = *F.q_u64();
  rec["variant"] = to_string(variant);
  rec["e"] = flags.e;
  rec["trivial"] = flags.trivial;
  rec["closed"] = to_decimal(closed);
  bool ok = true;
  if (power(F.q(), static_cast<unsigned long>(slots.size() - 1)) <= from_u64(kJacobiDirectCap)) {
    const Integer direct = jacobi_direct(slots, variant, F);
    ok = direct == closed;
    rec["direct"] = to_decimal(direct);
    rec["match"] = ok;
  }
  Emitter emit(out, flags.field.json);
  emit.row(rec);
  return ok ? kOk : kMismatch;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::BudgetExceeded: return kBudgetExceeded;
    case ErrorCode::NonIntegerResult: return kNonInteger;
    case ErrorCode::ConsistencyFailure: return kMismatch;
    default: return kInvalidInput;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts k-subsets of the quadratic residues of F_q with a given sum."};
  app.name("qrsum");
  app.require_subcommand(1);

  CountFlags count;
  auto* count_cmd = app.add_subcommand("count", "closed-form (or oracle) count for one target");
  add_field_flags(*count_cmd, count.field);
  count_cmd->add_option("--k", count.k, "subset size / tuple length");
  count_cmd->add_option("--b", count.b, "target element")->capture_default_str();
  count_cmd->add_option("--quantity", count.quantity, "subset | distinct | diagonal")->capture_default_str();
  count_cmd->add_option("--coeffs", count.coeffs, "diagonal coefficients (space separated)");
  count_cmd->add_option("--method", count.method, "closed_form | oracle | both")->capture_default_str();

  TableFlags table;
  auto* table_cmd = app.add_subcommand("table", "subset counts for every target b");
  add_field_flags(*table_cmd, table.field);
  table_cmd->add_option("--k", table.k, "subset size")->required();
  table_cmd->add_option("--method", table.method, "closed_form | oracle")->capture_default_str();

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "closed form vs oracle for all b and k <= max-k");
  add_field_flags(*verify_cmd, verify.field);
  verify_cmd->add_option("--max-k", verify.max_k, "largest k checked")->capture_default_str();
  verify_cmd->add_option("--quantity", verify.quantity, "subset | distinct")->capture_default_str();

  auto* sums_cmd = app.add_subcommand("charsums", "Gauss and Jacobi sums");
  sums_cmd->require_subcommand(1);
  GaussFlags gauss;
  auto* gauss_cmd = sums_cmd->add_subcommand("gauss", "quadratic Gauss sum G_a");
  add_field_flags(*gauss_cmd, gauss.field);
  gauss_cmd->add_option("--a", gauss.a, "element a")->capture_default_str();
  JacobiFlags jacobi;
  auto* jacobi_cmd = sums_cmd->add_subcommand("jacobi", "Jacobi-type sums of quadratic characters");
  add_field_flags(*jacobi_cmd, jacobi.field);
  jacobi_cmd->add_option("--e", jacobi.e, "number of quadratic slots")->required();
  jacobi_cmd->add_option("--trivial", jacobi.trivial, "number of trivial slots")->capture_default_str();
  jacobi_cmd->add_option("--variant", jacobi.variant, "J | Jstar | J0 | J0star")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (count_cmd->parsed()) {
      if (count.quantity != "diagonal" && count_cmd->count("--k") == 0) {
        throw Error(ErrorCode::InvalidArgument, "--k is required");
      }
      return cmd_count(count, out, err);
    }
    if (table_cmd->parsed()) return cmd_table(table, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (gauss_cmd->parsed()) return cmd_gauss(gauss, out);
    if (jacobi_cmd->parsed()) return cmd_jacobi(jacobi, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qrsum"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qrsum::cli
