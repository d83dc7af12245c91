#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "msetpart/bigint.hpp"
#include "msetpart/operators.hpp"
#include "msetpart/oracle.hpp"
#include "msetpart/polynomial.hpp"
#include "msetpart/sampler.hpp"

namespace msetpart {

inline std::string rational_to_text(const Rational& q) {
  if (is_integral(q)) return Integer(numerator(q)).str();
  return Integer(numerator(q)).str() + "/" + Integer(denominator(q)).str();
}

namespace detail {

inline void append_power(std::string& out, const std::string& base, std::uint32_t exp) {
  if (!out.empty()) out += "*";
  out += base;
  if (exp > 1) out += "^" + std::to_string(exp);
}

// Shared sign/coefficient handling for the "c*factors" term syntax.
inline void append_term(std::string& out, const Rational& coeff, const std::string& factors) {
  const bool negative = coeff < 0;
  const Rational mag = negative ? Rational(-coeff) : coeff;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (factors.empty()) {
    out += rational_to_text(mag);
  } else {
    if (mag != 1) out += rational_to_text(mag) + "*";
    out += factors;
  }
}

}  // namespace detail

// Canonical plain-text form, e.g. "z1^3 + 3*z1^2 + z1". Zero prints as "0".
inline std::string polynomial_to_text(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.sorted_terms()) {
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) detail::append_power(factors, "z" + std::to_string(i + 1), e[i]);
    }
    detail::append_term(out, c, factors);
  }
  return out;
}

// JSON form {"arity": r, "terms": [{"exps": [...], "coeff": "<int>"}...]}
// with terms in canonical order. Coefficients must be integral.
inline std::string polynomial_to_json(const SparsePolynomial& p) {
  std::ostringstream os;
  os << "{\"arity\": " << p.arity() << ", \"terms\": [";
  bool first = true;
  for (const auto& [e, c] : p.sorted_terms()) {
    if (!first) os << ", ";
    first = false;
    os << "{\"exps\": [";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << ", ";
      os << e[i];
    }
    os << "], \"coeff\": \"" << to_integer(c).str() << "\"}";
  }
  os << "]}";
  return os.str();
}

// Plain-text operator form, e.g. "1/2*z1^4*D2^2 + z1^3*D1*D2 + ... + z2".
inline std::string operator_to_text(const EvolutionOperator& op) {
  if (op.terms().empty()) return "0";
  std::string out;
  for (const auto& term : op.terms()) {
    std::string factors;
    for (std::size_t i = 0; i < term.z_exponents.size(); ++i) {
      if (term.z_exponents[i] > 0) {
        detail::append_power(factors, "z" + std::to_string(i + 1), term.z_exponents[i]);
      }
    }
    for (std::size_t i = 0; i < term.deriv_orders.size(); ++i) {
      if (term.deriv_orders[i] > 0) {
        detail::append_power(factors, "D" + std::to_string(i + 1), term.deriv_orders[i]);
      }
    }
    detail::append_term(out, term.coefficient, factors);
  }
  return out;
}

// LaTeX operator form using \frac for non-integral coefficients and
// subscripted variables, e.g. "\frac{1}{2} z_{1}^{4} D_{2}^{2}".
inline std::string operator_to_latex(const EvolutionOperator& op) {
  if (op.terms().empty()) return "0";
  std::string out;
  for (const auto& term : op.terms()) {
    if (!out.empty()) out += " + ";
    std::string piece;
    const Rational& c = term.coefficient;
    if (!is_integral(c)) {
      piece = "\\frac{" + Integer(numerator(c)).str() + "}{" + Integer(denominator(c)).str() + "}";
    } else if (c != 1) {
      piece = Integer(numerator(c)).str();
    }
    auto append_latex_power = [&piece](const std::string& base, std::size_t index,
                                       std::uint32_t exp) {
      if (!piece.empty()) piece += " ";
      piece += base + "_{" + std::to_string(index) + "}";
      if (exp > 1) piece += "^{" + std::to_string(exp) + "}";
    };
    for (std::size_t i = 0; i < term.z_exponents.size(); ++i) {
      if (term.z_exponents[i] > 0) append_latex_power("z", i + 1, term.z_exponents[i]);
    }
    for (std::size_t i = 0; i < term.deriv_orders.size(); ++i) {
      if (term.deriv_orders[i] > 0) append_latex_power("D", i + 1, term.deriv_orders[i]);
    }
    if (piece.empty()) piece = "1";
    out += piece;
  }
  return out;
}

// JSON operator form carrying the merged term count.
inline std::string operator_to_json(const EvolutionOperator& op) {
  std::ostringstream os;
  os << "{\"r\": " << op.r() << ", \"term_count\": " << op.terms().size() << ", \"terms\": [";
  bool first = true;
  for (const auto& term : op.terms()) {
    if (!first) os << ", ";
    first = false;
    os << "{\"coeff\": \"" << rational_to_text(term.coefficient) << "\", \"z\": [";
    for (std::size_t i = 0; i < term.z_exponents.size(); ++i) {
      if (i) os << ", ";
      os << term.z_exponents[i];
    }
    os << "], \"d\": [";
    for (std::size_t i = 0; i < term.deriv_orders.size(); ++i) {
      if (i) os << ", ";
      os << term.deriv_orders[i];
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

// Canonical arrangement form, e.g. "{1,2}|{1}|{2}".
inline std::string arrangement_to_text(const Arrangement& arr) {
  std::string out;
  for (const auto& block : arr.blocks) {
    if (!out.empty()) out += "|";
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(block[i]);
    }
    out += "}";
  }
  return out;
}

// Set-partition form with blocks by minimal element, e.g. "{1,3}{2}{4}".
inline std::string set_partition_to_text(const SetPartition& partition) {
  std::string out;
  for (const auto& block : partition.blocks) {
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(block[i]);
    }
    out += "}";
  }
  return out;
}

// "v1, v2, v3"
inline std::string sequence_to_text(const std::vector<Integer>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ", ";
    out += v.str();
  }
  return out;
}

// OEIS b-file style: one "<n> <value>" line per term, n starting at 1.
inline std::string sequence_to_bfile(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i + 1) + " " + values[i].str() + "\n";
  }
  return out;
}

// Inverse of sequence_to_bfile; validates the 1-based index column.
inline std::vector<Integer> parse_bfile(const std::string& text) {
  std::vector<Integer> values;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    unsigned long long index = 0;
    std::string value;
    if (!(ls >> index >> value)) throw std::invalid_argument("malformed b-file line: " + line);
    if (index != values.size() + 1) {
      throw std::invalid_argument("b-file indices must start at 1 and be consecutive");
    }
    values.emplace_back(value);
  }
  return values;
}

}  // namespace msetpart
