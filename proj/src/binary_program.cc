// Copyright 2026 The gapr Authors
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

#include "gapr/binary_program.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "gapr/errors.h"

namespace gapr {

BinaryProgram::BinaryProgram(int var_count)
    : objective_(var_count, 0.0), names_(var_count) {}

int BinaryProgram::AddVariable(double objective, std::string name) {
  objective_.push_back(objective);
  names_.push_back(std::move(name));
  return var_count() - 1;
}

void BinaryProgram::SetObjective(int var, double coef) {
  objective_.at(var) = coef;
}

int BinaryProgram::AddConstraint(std::vector<Term> terms, Sense sense,
                                 double rhs, std::string name) {
  constraints_.push_back({std::move(terms), sense, rhs, std::move(name)});
  return constraint_count() - 1;
}

int BinaryProgram::nonzero_count() const {
  int nnz = 0;
  for (const Constraint& c : constraints_) nnz += static_cast<int>(c.terms.size());
  return nnz;
}

std::string BinaryProgram::VarName(int var) const {
  if (var < static_cast<int>(names_.size()) && !names_[var].empty()) {
    return names_[var];
  }
  return "x" + std::to_string(var);
}

std::string BinaryProgram::ConstraintName(int row) const {
  if (!constraints_[row].name.empty()) return constraints_[row].name;
  return "c" + std::to_string(row);
}

double BinaryProgram::ObjectiveValue(std::span<const int> x) const {
  double v = 0.0;
  for (int j = 0; j < var_count(); ++j) v += objective_[j] * x[j];
  return v;
}

double BinaryProgram::Activity(int row, std::span<const double> x) const {
  double a = 0.0;
  for (const Term& t : constraints_[row].terms) a += t.coef * x[t.var];
  return a;
}

double BinaryProgram::MaxViolation(std::span<const double> x) const {
  double worst = 0.0;
  for (int r = 0; r < constraint_count(); ++r) {
    const double a = Activity(r, x);
    const double rhs = constraints_[r].rhs;
    double v = 0.0;
    switch (constraints_[r].sense) {
      case Sense::kLessEqual: v = a - rhs; break;
      case Sense::kGreaterEqual: v = rhs - a; break;
      case Sense::kEqual: v = std::abs(a - rhs); break;
    }
    worst = std::max(worst, v);
  }
  return worst;
}

bool BinaryProgram::IsFeasible(std::span<const int> x, double tol) const {
  if (static_cast<int>(x.size()) != var_count()) return false;
  std::vector<double> xd(x.begin(), x.end());
  for (double v : xd) {
    if (v != 0.0 && v != 1.0) return false;
  }
  return MaxViolation(xd) <= tol;
}

void BinaryProgram::Validate() const {
  for (double c : objective_) {
    if (!std::isfinite(c)) throw SolverError("non-finite objective coefficient");
  }
  for (const Constraint& c : constraints_) {
    if (!std::isfinite(c.rhs)) throw SolverError("non-finite right-hand side");
    for (const Term& t : c.terms) {
      if (t.var < 0 || t.var >= var_count()) {
        throw SolverError("constraint references variable " +
                          std::to_string(t.var) + " out of range");
      }
      if (!std::isfinite(t.coef)) throw SolverError("non-finite coefficient");
    }
  }
}

namespace {

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // Shortest representation that reads back to the same double.
  for (int precision = 1; precision <= 17; ++precision) {
    char shorter[32];
    std::snprintf(shorter, sizeof(shorter), "%.*g", precision, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

void WriteLinear(std::ostringstream& out, const std::vector<Term>& terms,
                 const BinaryProgram& program) {
  if (terms.empty()) {
    out << " 0";
    return;
  }
  bool first = true;
  for (const Term& t : terms) {
    const double mag = std::abs(t.coef);
    const bool negative = std::signbit(t.coef);
    if (first) {
      out << (negative ? " - " : " ");
    } else {
      out << (negative ? " - " : " + ");
    }
    out << FormatNumber(mag) << ' ' << program.VarName(t.var);
    first = false;
  }
}

const char* SenseToken(Sense s) {
  switch (s) {
    case Sense::kLessEqual: return "<=";
    case Sense::kGreaterEqual: return ">=";
    case Sense::kEqual: return "=";
  }
  return "=";
}

std::vector<std::string> Tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

double ParseNumber(const std::string& tok) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') {
    throw FormatError("lp: expected a number, got '" + tok + "'");
  }
  return v;
}

// Parses "[sign] coef name" sequences into terms.
std::vector<Term> ParseLinear(const std::vector<std::string>& tokens,
                              std::size_t begin, std::size_t end,
                              const std::map<std::string, int>& vars) {
  std::vector<Term> terms;
  std::size_t i = begin;
  if (end - begin == 1 && tokens[begin] == "0") return terms;
  while (i < end) {
    double sign = 1.0;
    if (tokens[i] == "+" || tokens[i] == "-") {
      sign = tokens[i] == "-" ? -1.0 : 1.0;
      ++i;
    }
    if (i + 1 >= end) throw FormatError("lp: dangling term");
    const double coef = ParseNumber(tokens[i]);
    auto it = vars.find(tokens[i + 1]);
    if (it == vars.end()) {
      throw FormatError("lp: unknown variable '" + tokens[i + 1] + "'");
    }
    terms.push_back({it->second, sign * coef});
    i += 2;
  }
  return terms;
}

}  // namespace

std::string WriteLpFormat(const BinaryProgram& program) {
  std::ostringstream out;
  out << "\\ binary program: " << program.var_count() << " variables, "
      << program.constraint_count() << " constraints\n";
  out << "minimize\n obj:";
  std::vector<Term> obj;
  for (int j = 0; j < program.var_count(); ++j) {
    if (program.objective()[j] != 0.0) obj.push_back({j, program.objective()[j]});
  }
  WriteLinear(out, obj, program);
  out << "\nsubject to\n";
  for (int r = 0; r < program.constraint_count(); ++r) {
    const Constraint& c = program.constraint(r);
    out << ' ' << program.ConstraintName(r) << ':';
    WriteLinear(out, c.terms, program);
    out << ' ' << SenseToken(c.sense) << ' ' << FormatNumber(c.rhs) << '\n';
  }
  out << "binary\n";
  for (int j = 0; j < program.var_count(); ++j) {
    out << ' ' << program.VarName(j) << '\n';
  }
  out << "end\n";
  return out.str();
}

BinaryProgram ReadLpFormat(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> obj_line;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> binaries;
  enum class Section { kNone, kObjective, kRows, kBinary, kEnd } section =
      Section::kNone;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '\\') continue;
    std::vector<std::string> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 1 && tokens[0] == "minimize") {
      section = Section::kObjective;
    } else if (tokens.size() == 2 && tokens[0] == "subject" && tokens[1] == "to") {
      section = Section::kRows;
    } else if (tokens.size() == 1 && tokens[0] == "binary") {
      section = Section::kBinary;
    } else if (tokens.size() == 1 && tokens[0] == "end") {
      section = Section::kEnd;
    } else if (section == Section::kObjective) {
      obj_line = std::move(tokens);
    } else if (section == Section::kRows) {
      rows.push_back(std::move(tokens));
    } else if (section == Section::kBinary) {
      binaries.insert(binaries.end(), tokens.begin(), tokens.end());
    } else {
      throw FormatError("lp: unexpected line '" + line + "'");
    }
  }
  if (section != Section::kEnd) throw FormatError("lp: missing 'end'");
  std::map<std::string, int> vars;
  BinaryProgram program;
  for (const std::string& name : binaries) {
    if (vars.count(name)) throw FormatError("lp: duplicate variable " + name);
    vars[name] = program.AddVariable(0.0, name);
  }
  if (obj_line.empty() || obj_line[0] != "obj:") {
    throw FormatError("lp: objective must start with 'obj:'");
  }
  for (const Term& t : ParseLinear(obj_line, 1, obj_line.size(), vars)) {
    program.SetObjective(t.var, program.objective()[t.var] + t.coef);
  }
  for (const auto& row : rows) {
    if (row.size() < 4 || row[0].back() != ':') {
      throw FormatError("lp: malformed constraint line");
    }
    const std::string& sense_tok = row[row.size() - 2];
    Sense sense;
    if (sense_tok == "<=") {
      sense = Sense::kLessEqual;
    } else if (sense_tok == ">=") {
      sense = Sense::kGreaterEqual;
    } else if (sense_tok == "=") {
      sense = Sense::kEqual;
    } else {
      throw FormatError("lp: unknown sense '" + sense_tok + "'");
    }
    std::string name = row[0].substr(0, row[0].size() - 1);
    program.AddConstraint(ParseLinear(row, 1, row.size() - 2, vars), sense,
                          ParseNumber(row.back()), std::move(name));
  }
  return program;
}

}  // namespace gapr
