// Copyright 2026 The pitchdict Authors.
//
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pitchdict::cli {

// Runs one subcommand. `args` excludes the program name. Returns 0 on
// success, 2 on a usage error and 1 on any other failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Lexicon used when --lexicon is not given: $PITCHDICT_LEXICON, else the
// bundled mini-lexicon.
std::string default_lexicon();

}  // namespace pitchdict::cli
