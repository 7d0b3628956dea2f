// Copyright (C) 2026 The tame kernel developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TAME_LOGIC_PARSER_HPP
#define TAME_LOGIC_PARSER_HPP

#include <string>

#include "logic/formula.hpp"

namespace tame {

// Parses the external formula grammar.  Throws SyntaxError with position.
Formula parse_formula(const std::string& text);
Polynomial parse_polynomial(const std::string& text);

} // namespace tame

#endif
