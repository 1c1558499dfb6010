// util/textio.h

// Copyright 2026  The ctxasr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXASR_UTIL_TEXTIO_H_
#define CTXASR_UTIL_TEXTIO_H_

#include <string>
#include <vector>

namespace ctxasr {

// Splits on runs of whitespace; no empty tokens.
std::vector<std::string> SplitWhitespace(const std::string& line);

// Splits on single tab characters; empty fields preserved.
std::vector<std::string> SplitTab(const std::string& line);

std::string JoinWords(const std::vector<std::string>& words);

// Formats a double so that parsing it back recovers the exact value.
std::string FormatFull(double value);

double ParseDouble(const std::string& token, const std::string& where);
int ParseInt(const std::string& token, const std::string& where);

// Whole-file helpers; DataError on I/O failure.
std::vector<std::string> ReadLines(const std::string& path);
void WriteFile(const std::string& path, const std::string& content);
std::string ReadFile(const std::string& path);

}  // namespace ctxasr

#endif  // CTXASR_UTIL_TEXTIO_H_
