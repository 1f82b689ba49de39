// Copyright 2026 The dqbreak Authors
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

#include "dqbreak/dqdimacs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "dqbreak/error.hpp"

namespace dqbreak {
namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long long ToInteger(std::string_view token, std::size_t line_no) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kMalformedLine,
                "line " + std::to_string(line_no) + ": bad integer '" +
                    std::string(token) + "'");
  }
  return value;
}

class Parser {
 public:
  ParseResult Run(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no_;
      auto tokens = Tokenize(line);
      if (tokens.empty()) continue;
      const std::string_view head = tokens.front();
      if (head == "c") continue;
      if (head.front() == 'c' && head.size() > 1 &&
          !std::isdigit(static_cast<unsigned char>(head[1]))) {
        continue;
      }
      if (!have_header_) {
        ParseHeader(tokens);
        continue;
      }
      if (head == "p") Fail(ErrorCode::kMalformedHeader, "second header line");
      if (head == "a" || head == "e" || head == "d") {
        if (in_matrix_) {
          Fail(ErrorCode::kMalformedLine, "quantifier line after clauses");
        }
        if (head == "a") {
          ParseBlock(tokens, Quantifier::kUniversal);
        } else if (head == "e") {
          ParseBlock(tokens, Quantifier::kExistential);
        } else {
          ParseDependencyLine(tokens);
        }
        continue;
      }
      ParseClauses(tokens);
    }
    if (!have_header_) Fail(ErrorCode::kMalformedHeader, "missing header");
    // Clauses may span lines, but the last one must be closed.
    if (open_) Fail(ErrorCode::kBadTermination, "clause without terminating 0");
    return Finish();
  }

 private:
  [[noreturn]] void Fail(ErrorCode code, const std::string& what) const {
    throw Error(code, "line " + std::to_string(line_no_) + ": " + what);
  }

  void ParseHeader(const std::vector<std::string_view>& tokens) {
    if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf") {
      Fail(ErrorCode::kMalformedHeader, "expected 'p cnf <vars> <clauses>'");
    }
    long long vars = 0;
    long long clauses = 0;
    try {
      vars = ToInteger(tokens[2], line_no_);
      clauses = ToInteger(tokens[3], line_no_);
    } catch (const Error&) {
      Fail(ErrorCode::kMalformedHeader, "non-numeric header field");
    }
    if (vars < 0 || clauses < 0 || vars > (1LL << 31)) {
      Fail(ErrorCode::kMalformedHeader, "negative or oversized header field");
    }
    declared_vars_ = static_cast<std::size_t>(vars);
    declared_clauses_ = static_cast<std::size_t>(clauses);
    quantified_.assign(declared_vars_, 0);
    is_universal_.assign(declared_vars_, 0);
    have_header_ = true;
  }

  Var CheckVar(long long value) const {
    if (value <= 0 || static_cast<std::size_t>(value) > declared_vars_) {
      Fail(ErrorCode::kUndeclaredVariable,
           "variable " + std::to_string(value) + " outside 1.." +
               std::to_string(declared_vars_));
    }
    return static_cast<Var>(value);
  }

  std::vector<long long> ReadTerminated(
      const std::vector<std::string_view>& tokens, std::size_t first) const {
    std::vector<long long> values;
    for (std::size_t i = first; i < tokens.size(); ++i) {
      values.push_back(ToInteger(tokens[i], line_no_));
    }
    if (values.empty() || values.back() != 0) {
      Fail(ErrorCode::kBadTermination, "missing terminating 0");
    }
    values.pop_back();
    if (std::find(values.begin(), values.end(), 0) != values.end()) {
      Fail(ErrorCode::kBadTermination, "0 inside quantifier line");
    }
    return values;
  }

  void Quantify(Var v) {
    if (quantified_[v - 1]) {
      Fail(ErrorCode::kDuplicateQuantification,
           "variable " + std::to_string(v) + " quantified twice");
    }
    quantified_[v - 1] = 1;
  }

  void ParseBlock(const std::vector<std::string_view>& tokens, Quantifier q) {
    for (long long raw : ReadTerminated(tokens, 1)) {
      const Var v = CheckVar(raw);
      Quantify(v);
      if (q == Quantifier::kUniversal) {
        universals_.push_back(v);
        is_universal_[v - 1] = 1;
      } else {
        std::vector<Var> deps = universals_;
        std::sort(deps.begin(), deps.end());
        existentials_.push_back(Existential{v, std::move(deps)});
      }
    }
  }

  void ParseDependencyLine(const std::vector<std::string_view>& tokens) {
    const auto values = ReadTerminated(tokens, 1);
    if (values.empty()) Fail(ErrorCode::kMalformedLine, "empty 'd' line");
    const Var y = CheckVar(values.front());
    Quantify(y);
    std::vector<Var> deps;
    for (std::size_t i = 1; i < values.size(); ++i) {
      const Var x = CheckVar(values[i]);
      if (!is_universal_[x - 1]) {
        Fail(ErrorCode::kUndeclaredVariable,
             "dependency " + std::to_string(x) + " is not a declared universal");
      }
      deps.push_back(x);
    }
    std::sort(deps.begin(), deps.end());
    deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
    existentials_.push_back(Existential{y, std::move(deps)});
    saw_dependency_line_ = true;
  }

  void ParseClauses(const std::vector<std::string_view>& tokens) {
    in_matrix_ = true;
    for (std::string_view token : tokens) {
      const long long value = ToInteger(token, line_no_);
      if (value == 0) {
        matrix_.push_back(std::move(current_));
        current_.clear();
        open_ = false;
        continue;
      }
      const Var v = CheckVar(value < 0 ? -value : value);
      current_.push_back(value < 0 ? Neg(v) : Pos(v));
      open_ = true;
    }
  }

  ParseResult Finish() {
    ParseResult result;
    std::vector<Var> all_universals = universals_;
    std::sort(all_universals.begin(), all_universals.end());
    for (std::size_t i = 0; i < declared_vars_; ++i) {
      if (!quantified_[i]) {
        const Var v = static_cast<Var>(i + 1);
        existentials_.push_back(Existential{v, all_universals});
        result.warnings.push_back("variable " + std::to_string(v) +
                                  " not quantified; treated as innermost "
                                  "existential");
      }
    }
    if (matrix_.size() != declared_clauses_) {
      result.warnings.push_back(
          "header declares " + std::to_string(declared_clauses_) +
          " clauses, found " + std::to_string(matrix_.size()));
    }
    Prefix prefix{std::move(universals_), std::move(existentials_)};
    result.dqbf = Dqbf::Make(std::move(prefix), std::move(matrix_));
    result.format =
        saw_dependency_line_ ? SourceFormat::kDqdimacs : SourceFormat::kQdimacs;
    return result;
  }

  std::size_t line_no_ = 0;
  bool have_header_ = false;
  bool in_matrix_ = false;
  bool saw_dependency_line_ = false;
  std::size_t declared_vars_ = 0;
  std::size_t declared_clauses_ = 0;
  std::vector<std::uint8_t> quantified_;
  std::vector<std::uint8_t> is_universal_;
  std::vector<Var> universals_;
  std::vector<Existential> existentials_;
  std::vector<Clause> matrix_;
  Clause current_;
  bool open_ = false;
};

void WriteVarLine(std::ostream& out, char tag, const std::vector<Var>& vars) {
  out << tag;
  for (Var v : vars) out << ' ' << v;
  out << " 0\n";
}

}  // namespace

ParseResult Parse(std::istream& in) { return Parser().Run(in); }

ParseResult ParseText(std::string_view text) {
  std::istringstream in{std::string(text)};
  return Parse(in);
}

ParseResult ParseFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot open " + path.string());
  }
  return Parse(in);
}

bool IsLinearizable(const Prefix& prefix) {
  std::vector<const std::vector<Var>*> sets;
  for (const Existential& e : prefix.existentials) sets.push_back(&e.deps);
  std::stable_sort(sets.begin(), sets.end(), [](auto* a, auto* b) {
    return a->size() < b->size();
  });
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (!IsSubset(*sets[i - 1], *sets[i])) return false;
  }
  return true;
}

void Write(std::ostream& out, const Dqbf& dqbf, SourceFormat format) {
  const Prefix& prefix = dqbf.prefix;
  if (format == SourceFormat::kQdimacs && !IsLinearizable(prefix)) {
    throw Error(ErrorCode::kNotLinearizable,
                "dependency sets do not form a chain");
  }
  out << "p cnf " << dqbf.var_count() << ' ' << dqbf.matrix.size() << '\n';
  if (format == SourceFormat::kDqdimacs) {
    if (!prefix.universals.empty()) WriteVarLine(out, 'a', prefix.universals);
    for (const Existential& e : prefix.existentials) {
      out << "d " << e.var;
      for (Var d : e.deps) out << ' ' << d;
      out << " 0\n";
    }
  } else {
    std::vector<std::size_t> order(prefix.existentials.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return prefix.existentials[a].deps.size() <
             prefix.existentials[b].deps.size();
    });
    std::vector<std::uint8_t> emitted(dqbf.var_count(), 0);
    std::size_t i = 0;
    while (i < order.size()) {
      const std::vector<Var>& deps = prefix.existentials[order[i]].deps;
      std::vector<Var> block;
      for (Var x : prefix.universals) {
        if (!emitted[x - 1] && std::binary_search(deps.begin(), deps.end(), x)) {
          block.push_back(x);
          emitted[x - 1] = 1;
        }
      }
      if (!block.empty()) WriteVarLine(out, 'a', block);
      std::vector<Var> group;
      while (i < order.size() && prefix.existentials[order[i]].deps == deps) {
        group.push_back(prefix.existentials[order[i]].var);
        ++i;
      }
      WriteVarLine(out, 'e', group);
    }
    std::vector<Var> rest;
    for (Var x : prefix.universals) {
      if (!emitted[x - 1]) rest.push_back(x);
    }
    if (!rest.empty()) WriteVarLine(out, 'a', rest);
  }
  for (const Clause& c : dqbf.matrix) {
    for (Literal l : c) out << l.ToDimacs() << ' ';
    out << "0\n";
  }
}

std::string WriteText(const Dqbf& dqbf, SourceFormat format) {
  std::ostringstream out;
  Write(out, dqbf, format);
  return out.str();
}

void WriteFile(const std::filesystem::path& path, const Dqbf& dqbf,
               SourceFormat format) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  }
  Write(out, dqbf, format);
}

}  // namespace dqbreak
