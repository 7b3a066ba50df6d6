// Copyright 2026 The cloudfog Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLOUDFOG_LP_FORMAT_HPP
#define CLOUDFOG_LP_FORMAT_HPP

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cloudfog/milp.hpp"

namespace cloudfog {

namespace detail {

inline std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

/// Writes the model in CPLEX LP format: a problem-name comment, Minimize,
/// Subject To, Bounds, Binaries, Generals, End. Variable order follows the
/// registry; the output is deterministic.
inline void emit_lp(const MilpModel& m, std::ostream& os) {
  os << "\\ Problem name: " << (m.name.empty() ? "cloudfog" : m.name) << "\n";
  os << "Minimize\n obj:";
  if (m.objective.empty()) {
    os << " 0 " << (m.variables.empty() ? "x0" : m.variables[0].name);
  }
  int on_line = 0;
  for (const MilpTerm& t : m.objective) {
    double c = t.coeff;
    os << (c < 0 ? " - " : " + ") << detail::fmt_num(std::abs(c)) << " "
       << m.variables[t.var].name;
    if (++on_line % 6 == 0) os << "\n   ";
  }
  os << "\nSubject To\n";
  for (const MilpRow& row : m.rows) {
    os << " " << row.name << ":";
    on_line = 0;
    for (const MilpTerm& t : row.terms) {
      double c = t.coeff;
      os << (c < 0 ? " - " : " + ") << detail::fmt_num(std::abs(c)) << " "
         << m.variables[t.var].name;
      if (++on_line % 6 == 0) os << "\n   ";
    }
    switch (row.sense) {
      case RowSense::Le: os << " <= "; break;
      case RowSense::Ge: os << " >= "; break;
      case RowSense::Eq: os << " = "; break;
    }
    os << detail::fmt_num(row.rhs) << "\n";
  }
  os << "Bounds\n";
  for (const MilpVariable& v : m.variables) {
    if (v.kind == VarKind::Binary) continue;  // implied 0..1
    bool def_lower = v.lower == 0.0;
    bool def_upper = std::isinf(v.upper);
    if (def_lower && def_upper) continue;
    if (def_upper) {
      os << " " << v.name << " >= " << detail::fmt_num(v.lower) << "\n";
    } else {
      os << " " << detail::fmt_num(v.lower) << " <= " << v.name
         << " <= " << detail::fmt_num(v.upper) << "\n";
    }
  }
  bool any_bin = false, any_int = false;
  for (const MilpVariable& v : m.variables) {
    any_bin |= v.kind == VarKind::Binary;
    any_int |= v.kind == VarKind::Integer;
  }
  if (any_bin) {
    os << "Binaries\n";
    on_line = 0;
    for (const MilpVariable& v : m.variables) {
      if (v.kind != VarKind::Binary) continue;
      os << " " << v.name;
      if (++on_line % 8 == 0) os << "\n";
    }
    if (on_line % 8 != 0) os << "\n";
  }
  if (any_int) {
    os << "Generals\n";
    on_line = 0;
    for (const MilpVariable& v : m.variables) {
      if (v.kind != VarKind::Integer) continue;
      os << " " << v.name;
      if (++on_line % 8 == 0) os << "\n";
    }
    if (on_line % 8 != 0) os << "\n";
  }
  os << "End\n";
}

inline std::string emit_lp(const MilpModel& m) {
  std::ostringstream os;
  emit_lp(m, os);
  return os.str();
}

namespace detail {

struct LpTokenizer {
  std::string text;
  size_t pos = 0;

  void skip_space_and_comments() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\\') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        return;
      }
    }
  }
  bool eof() {
    skip_space_and_comments();
    return pos >= text.size();
  }
  std::string peek() {
    size_t save = pos;
    std::string tok = next();
    pos = save;
    return tok;
  }
  std::string next() {
    skip_space_and_comments();
    if (pos >= text.size()) return "";
    char c = text[pos];
    if (c == '+' || c == '-' || c == ':') {
      ++pos;
      return std::string(1, c);
    }
    if (c == '<' || c == '>' || c == '=') {
      size_t start = pos;
      ++pos;
      if (pos < text.size() && text[pos] == '=') ++pos;
      return text.substr(start, pos - start);
    }
    size_t start = pos;
    while (pos < text.size()) {
      char d = text[pos];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '+' || d == '-' ||
          d == ':' || d == '<' || d == '>' || d == '=') {
        // '-' and '+' may continue an exponent (1e-3)
        if ((d == '-' || d == '+') && pos > start &&
            (text[pos - 1] == 'e' || text[pos - 1] == 'E') &&
            std::isdigit(static_cast<unsigned char>(text[start]))) {
          ++pos;
          continue;
        }
        break;
      }
      ++pos;
    }
    return text.substr(start, pos - start);
  }
};

inline bool is_number(const std::string& tok) {
  if (tok.empty()) return false;
  char c = tok[0];
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
}

inline double to_number(const std::string& tok) { return std::stod(tok); }

inline bool is_keyword(const std::string& tok, const char* kw) {
  if (tok.size() != std::string(kw).size()) return false;
  for (size_t i = 0; i < tok.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(tok[i])) !=
        std::tolower(static_cast<unsigned char>(kw[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Parses the LP subset emit_lp writes (Minimize / Subject To / Bounds /
/// Binaries / Generals / End). Returns a structurally identical model.
inline MilpModel parse_lp(const std::string& text) {
  using namespace detail;
  MilpModel m;
  // problem name comment
  {
    auto at = text.find("\\ Problem name:");
    if (at != std::string::npos) {
      auto end = text.find('\n', at);
      std::string name = text.substr(at + 15, end - at - 15);
      size_t b = name.find_first_not_of(" \t");
      size_t e = name.find_last_not_of(" \t\r");
      if (b != std::string::npos) m.name = name.substr(b, e - b + 1);
    }
  }
  LpTokenizer tz{text, 0};
  auto ensure_var = [&](const std::string& name) {
    return m.add_variable(name, VarKind::Continuous, 0.0,
                          std::numeric_limits<double>::infinity());
  };
  std::string tok = tz.next();
  if (!is_keyword(tok, "Minimize") && !is_keyword(tok, "Minimise")) {
    throw std::runtime_error("parse_lp: expected Minimize, got '" + tok + "'");
  }
  // objective: [name:] terms, until "Subject"
  tok = tz.next();
  if (tz.peek() == ":") {
    tz.next();  // drop "obj:"
    tok = tz.next();
  }
  double sign = 1.0;
  bool pending_sign = false;
  auto parse_terms = [&](std::vector<MilpTerm>& out, std::string& cur,
                         auto&& stop) {
    sign = 1.0;
    pending_sign = false;
    while (!cur.empty() && !stop(cur)) {
      if (cur == "+") {
        sign = pending_sign ? sign : 1.0;
        pending_sign = true;
        cur = tz.next();
        continue;
      }
      if (cur == "-") {
        sign = pending_sign ? -sign : -1.0;
        pending_sign = true;
        cur = tz.next();
        continue;
      }
      double coeff = 1.0;
      if (is_number(cur)) {
        coeff = to_number(cur);
        cur = tz.next();
      }
      if (cur.empty() || stop(cur) || cur == "+" || cur == "-") {
        // bare constant; fold into nothing (only "0 x" style emitted)
        sign = 1.0;
        pending_sign = false;
        continue;
      }
      int v = ensure_var(cur);
      // zero coefficients are placeholders (the writer emits "0 x" only for
      // an empty objective); keep the model structurally clean
      if (coeff != 0.0) out.push_back(MilpTerm{v, sign * coeff});
      sign = 1.0;
      pending_sign = false;
      cur = tz.next();
    }
  };
  auto is_subject = [&](const std::string& s) {
    return is_keyword(s, "Subject");
  };
  std::vector<MilpTerm> obj;
  parse_terms(obj, tok, is_subject);
  m.objective = std::move(obj);
  // "Subject To"
  if (!is_keyword(tok, "Subject")) {
    throw std::runtime_error("parse_lp: expected Subject To");
  }
  tok = tz.next();  // "To"
  if (!is_keyword(tok, "To")) {
    throw std::runtime_error("parse_lp: expected To after Subject");
  }
  tok = tz.next();
  auto section_start = [&](const std::string& s) {
    return is_keyword(s, "Bounds") || is_keyword(s, "Binaries") ||
           is_keyword(s, "Binary") || is_keyword(s, "Generals") ||
           is_keyword(s, "General") || is_keyword(s, "End");
  };
  while (!tok.empty() && !section_start(tok)) {
    // row: name ':' terms sense rhs
    std::string rname = tok;
    std::string colon = tz.next();
    if (colon != ":") {
      throw std::runtime_error("parse_lp: expected ':' after row name " + rname);
    }
    tok = tz.next();
    std::vector<MilpTerm> terms;
    auto stop_row = [&](const std::string& s) {
      return s == "<=" || s == ">=" || s == "=" || s == "<" || s == ">";
    };
    parse_terms(terms, tok, stop_row);
    RowSense sense;
    if (tok == "<=" || tok == "<") {
      sense = RowSense::Le;
    } else if (tok == ">=" || tok == ">") {
      sense = RowSense::Ge;
    } else if (tok == "=") {
      sense = RowSense::Eq;
    } else {
      throw std::runtime_error("parse_lp: row " + rname + " lacks a sense");
    }
    std::string rhs_tok = tz.next();
    double rhs_sign = 1.0;
    if (rhs_tok == "-") {
      rhs_sign = -1.0;
      rhs_tok = tz.next();
    } else if (rhs_tok == "+") {
      rhs_tok = tz.next();
    }
    MilpRow& row = m.add_row(rname, sense, rhs_sign * to_number(rhs_tok));
    row.terms = std::move(terms);
    tok = tz.next();
  }
  // Bounds
  if (is_keyword(tok, "Bounds")) {
    tok = tz.next();
    while (!tok.empty() && !section_start(tok)) {
      double first_sign = 1.0;
      if (tok == "-") {
        first_sign = -1.0;
        tok = tz.next();
      }
      if (is_number(tok)) {
        // lb <= var <= ub
        double lb = first_sign * to_number(tok);
        std::string le1 = tz.next();
        std::string var = tz.next();
        std::string le2 = tz.next();
        std::string ub_tok = tz.next();
        double ub_sign = 1.0;
        if (ub_tok == "-") {
          ub_sign = -1.0;
          ub_tok = tz.next();
        }
        if (le1 != "<=" || le2 != "<=") {
          throw std::runtime_error("parse_lp: malformed bound");
        }
        int v = ensure_var(var);
        m.variables[v].lower = lb;
        m.variables[v].upper = ub_sign * to_number(ub_tok);
      } else {
        // var >= lb | var <= ub | var free
        std::string var = tok;
        std::string op = tz.next();
        if (is_keyword(op, "free")) {
          int v = ensure_var(var);
          m.variables[v].lower = -std::numeric_limits<double>::infinity();
        } else {
          std::string val_tok = tz.next();
          double val_sign = 1.0;
          if (val_tok == "-") {
            val_sign = -1.0;
            val_tok = tz.next();
          }
          int v = ensure_var(var);
          double val = val_sign * to_number(val_tok);
          if (op == ">=") {
            m.variables[v].lower = val;
          } else if (op == "<=") {
            m.variables[v].upper = val;
          } else {
            throw std::runtime_error("parse_lp: malformed bound for " + var);
          }
        }
      }
      tok = tz.next();
    }
  }
  // Binaries / Generals
  while (!tok.empty() && !is_keyword(tok, "End")) {
    if (is_keyword(tok, "Binaries") || is_keyword(tok, "Binary")) {
      tok = tz.next();
      while (!tok.empty() && !section_start(tok)) {
        int v = ensure_var(tok);
        m.variables[v].kind = VarKind::Binary;
        m.variables[v].lower = 0.0;
        m.variables[v].upper = 1.0;
        tok = tz.next();
      }
    } else if (is_keyword(tok, "Generals") || is_keyword(tok, "General")) {
      tok = tz.next();
      while (!tok.empty() && !section_start(tok)) {
        int v = ensure_var(tok);
        m.variables[v].kind = VarKind::Integer;
        tok = tz.next();
      }
    } else {
      throw std::runtime_error("parse_lp: unexpected section '" + tok + "'");
    }
  }
  if (!is_keyword(tok, "End")) {
    throw std::runtime_error("parse_lp: missing End");
  }
  return m;
}

/// Structural model equality: same variables (name, kind, bounds), same rows
/// (name, sense, rhs, terms) and same objective, order-insensitive within
/// rows. Variable order itself may differ.
inline bool structurally_equal(const MilpModel& a, const MilpModel& b,
                               double tol = 0.0) {
  if (a.variables.size() != b.variables.size()) return false;
  if (a.rows.size() != b.rows.size()) return false;
  auto close = [&](double x, double y) {
    if (std::isinf(x) || std::isinf(y)) return x == y;
    return std::abs(x - y) <= tol;
  };
  for (const MilpVariable& v : a.variables) {
    auto it = b.index.find(v.name);
    if (it == b.index.end()) return false;
    const MilpVariable& w = b.variables[it->second];
    if (v.kind != w.kind || !close(v.lower, w.lower) || !close(v.upper, w.upper)) {
      return false;
    }
  }
  auto canon = [&](const MilpModel& m, const std::vector<MilpTerm>& terms) {
    std::vector<std::pair<std::string, double>> out;
    for (const MilpTerm& t : terms) {
      out.emplace_back(m.variables[t.var].name, t.coeff);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto rows_match = [&](const MilpRow& ra, const MilpRow& rb) {
    if (ra.name != rb.name || ra.sense != rb.sense || !close(ra.rhs, rb.rhs)) {
      return false;
    }
    auto ca = canon(a, ra.terms);
    auto cb = canon(b, rb.terms);
    if (ca.size() != cb.size()) return false;
    for (size_t i = 0; i < ca.size(); ++i) {
      if (ca[i].first != cb[i].first || !close(ca[i].second, cb[i].second)) {
        return false;
      }
    }
    return true;
  };
  for (size_t i = 0; i < a.rows.size(); ++i) {
    if (!rows_match(a.rows[i], b.rows[i])) return false;
  }
  auto oa = canon(a, a.objective);
  auto ob = canon(b, b.objective);
  if (oa.size() != ob.size()) return false;
  for (size_t i = 0; i < oa.size(); ++i) {
    if (oa[i].first != ob[i].first || !close(oa[i].second, ob[i].second)) {
      return false;
    }
  }
  return true;
}

}  // namespace cloudfog

#endif  // CLOUDFOG_LP_FORMAT_HPP
