// Copyright 2026 The ontoeco Authors.
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

#include "ontoeco/ref.hpp"

#include <cctype>

namespace ontoeco {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering natural_compare(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t si = i, sj = j;
      while (si < a.size() && a[si] == '0') ++si;
      while (sj < b.size() && b[sj] == '0') ++sj;
      std::size_t ei = si, ej = sj;
      while (ei < a.size() && is_digit(a[ei])) ++ei;
      while (ej < b.size() && is_digit(b[ej])) ++ej;
      if (ei - si != ej - sj) return to_ordering(ei - si < ej - sj ? -1 : 1);
      if (int c = a.substr(si, ei - si).compare(b.substr(sj, ej - sj)); c != 0) return to_ordering(c);
      i = ei;
      j = ej;
      continue;
    }
    if (a[i] != b[j]) {
      return to_ordering(static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1);
    }
    ++i;
    ++j;
  }
  if (i < a.size()) return std::strong_ordering::greater;
  if (j < b.size()) return std::strong_ordering::less;
  return to_ordering(a.compare(b));
}

std::optional<std::pair<std::string, std::string>> split_ref(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) return std::nullopt;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) return std::nullopt;
  }
  return std::make_pair(std::string(text.substr(0, colon)), std::string(text.substr(colon + 1)));
}

std::strong_ordering subject_compare(std::string_view a, std::string_view b) {
  auto ca = a.find(':');
  auto cb = b.find(':');
  std::string_view ha = ca == std::string_view::npos ? a : a.substr(0, ca);
  std::string_view hb = cb == std::string_view::npos ? b : b.substr(0, cb);
  if (int c = ha.compare(hb); c != 0) return to_ordering(c);
  std::string_view ta = ca == std::string_view::npos ? std::string_view{} : a.substr(ca + 1);
  std::string_view tb = cb == std::string_view::npos ? std::string_view{} : b.substr(cb + 1);
  if (auto c = natural_compare(ta, tb); c != 0) return c;
  return to_ordering(a.compare(b));
}

}  // namespace ontoeco
