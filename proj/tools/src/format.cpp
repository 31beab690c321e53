// Copyright 2026 The weur Authors
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

#include "format.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "weur/errors.hpp"

namespace weur::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_plain(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ValidationError("cannot parse '" + std::string(whole) + "' as a real number");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
  const std::string_view s = trim(text);
  const auto at = s.find("pi");
  if (at == std::string_view::npos) return parse_plain(s, text);

  std::string_view coef = trim(s.substr(0, at));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double c = 1.0;
  if (coef == "-") {
    c = -1.0;
  } else if (!coef.empty() && coef != "+") {
    c = parse_plain(coef, text);
  }
  std::string_view rest = trim(s.substr(at + 2));
  double div = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw ValidationError("cannot parse '" + std::string(text) + "'");
    div = parse_plain(rest.substr(1), text);
    if (div == 0.0) throw ValidationError("division by zero in '" + std::string(text) + "'");
  }
  return c * std::numbers::pi / div;
}

std::vector<double> parse_grid(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) return {};
  if (s.find(':') != std::string_view::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw ValidationError("grid must look like start:stop:count");
    const double a = parse_real(parts[0]);
    const double b = parse_real(parts[1]);
    const double n = parse_plain(parts[2], text);
    if (n < 1 || n != std::floor(n) || n > 1e7) {
      throw ValidationError("grid count must be a positive integer");
    }
    const auto count = static_cast<int>(n);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      out.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(i) / (count - 1));
    }
    if (count > 1) out.back() = b;
    return out;
  }
  std::vector<double> out;
  for (auto part : split(s, ',')) out.push_back(parse_real(part));
  return out;
}

std::vector<RenyiOrder> parse_alphas(std::string_view text) {
  std::vector<RenyiOrder> out;
  for (auto part : split(trim(text), ',')) {
    const auto t = trim(part);
    if (t.empty()) continue;
    out.push_back(RenyiOrder::parse(t));
  }
  if (out.empty()) throw ValidationError("at least one alpha is required");
  return out;
}

std::string csv_safe(std::string text) {
  for (char& ch : text) {
    if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
    if (ch == '"') ch = '\'';
  }
  return text;
}

}  // namespace weur::cli
