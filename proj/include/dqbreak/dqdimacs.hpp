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

#ifndef DQBREAK_DQDIMACS_HPP_
#define DQBREAK_DQDIMACS_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dqbreak/formula.hpp"

namespace dqbreak {

enum class SourceFormat { kQdimacs, kDqdimacs };

struct ParseResult {
  Dqbf dqbf;
  SourceFormat format = SourceFormat::kQdimacs;
  std::vector<std::string> warnings;
};

// Reads QDIMACS or DQDIMACS. Existentials introduced by `e` lines depend on
// every universal declared before them; `d y x1 .. xm 0` gives y exactly
// the listed dependencies. Header variables that are never quantified are
// appended as existentials depending on all universals (with a warning).
ParseResult Parse(std::istream& in);
ParseResult ParseText(std::string_view text);
ParseResult ParseFile(const std::filesystem::path& path);

// True iff the dependency sets form a chain under inclusion, i.e. the
// prefix can be written as a prenex QBF.
bool IsLinearizable(const Prefix& prefix);

// Canonical serialization. DQDIMACS: one `a` line, then one `d` line per
// existential in prefix order. QDIMACS: alternating blocks derived from the
// dependency chain; throws kNotLinearizable if there is none.
void Write(std::ostream& out, const Dqbf& dqbf, SourceFormat format);
std::string WriteText(const Dqbf& dqbf, SourceFormat format);
void WriteFile(const std::filesystem::path& path, const Dqbf& dqbf,
               SourceFormat format);

}  // namespace dqbreak

#endif  // DQBREAK_DQDIMACS_HPP_
