/* Copyright (C) 2026 The chaincodes Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include <chaincodes/error.hpp>
#include <chaincodes/parse.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace chaincodes {

namespace {

constexpr std::size_t kMaxDegree = 1u << 16;

class ExprParser
{
public:
  ExprParser(std::string_view text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  Poly parse()
  {
    skip();
    if (pos_ == s_.size())
      throw ParseError("empty expression", pos_);
    Poly r = expr();
    skip();
    if (pos_ != s_.size())
      throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

private:
  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(char c)
  {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t integer()
  {
    skip();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ptr == s_.data() + pos_)
      throw ParseError("expected an integer", start);
    if (ec == std::errc::result_out_of_range)
      throw ParseError("integer literal too large", start);
    pos_ = std::size_t(ptr - s_.data());
    return v;
  }

  Poly expr()
  {
    Poly r = term();
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  Poly term()
  {
    Poly r = unary();
    while (accept('*'))
      r *= unary();
    return r;
  }

  Poly unary()
  {
    if (accept('-'))
      return -unary();
    return power();
  }

  Poly power()
  {
    Poly base = atom();
    if (!accept('^'))
      return base;
    const std::size_t at = pos_;
    const std::uint64_t e = integer();
    if (base.degree() > 0 && e > kMaxDegree / std::uint64_t(base.degree()))
      throw ParseError("exponent overflow", at);
    if (base.degree() <= 0 && e > (std::uint64_t(1) << 32))
      throw ParseError("exponent overflow", at);
    return pow(base, std::size_t(e));
  }

  Poly atom()
  {
    skip();
    if (pos_ == s_.size())
      throw ParseError("unexpected end of expression", pos_);
    const char c = s_[pos_];
    const ChainRing& R = *ring_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      return Poly::constant(ring_, R.from_int(static_cast<long long>(v % R.order())));
    }
    if (c == 'z') {
      ++pos_;
      return Poly::z(ring_);
    }
    if (c == 'g') {
      ++pos_;
      return Poly::constant(ring_, R.gamma());
    }
    if (c == 'x') {
      if (R.m() == 1)
        throw ParseError("'x' is only defined when the residue field is an extension", pos_);
      ++pos_;
      return Poly::constant(ring_, R.field_generator());
    }
    if (c == '(') {
      ++pos_;
      Poly r = expr();
      if (!accept(')'))
        throw ParseError("expected ')'", pos_);
      return r;
    }
    if (c == '[') {
      ++pos_;
      std::vector<Elem> coeffs;
      if (accept(']'))
        return Poly(ring_);
      do {
        skip();
        const std::size_t at = pos_;
        Poly e = list_entry();
        if (e.degree() > 0)
          throw ParseError("coefficient must be a constant", at);
        coeffs.push_back(e.coeff(0));
      } while (accept(','));
      if (!accept(']'))
        throw ParseError("expected ']'", pos_);
      return Poly(ring_, std::move(coeffs));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Poly list_entry()
  {
    // A bare integer is a coefficient and must be a residue mod char R.
    const std::size_t save = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::uint64_t v = integer();
      skip();
      if (pos_ == s_.size() || s_[pos_] == ',' || s_[pos_] == ']') {
        std::uint64_t ch = 1;
        for (unsigned i = 0; i < ring_->char_exponent(); ++i)
          ch *= ring_->p();
        if (v >= ch)
          throw ParseError("coefficient " + std::to_string(v) + " outside " + ring_->name(), save);
        return Poly::constant(ring_, ring_->from_int(static_cast<long long>(v)));
      }
      pos_ = save;
    }
    return expr();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

Poly generator_from_json(const nlohmann::json& g, const RingPtr& ring)
{
  if (g.is_string())
    return parse_poly(g.get<std::string>(), ring);
  if (g.is_array()) {
    std::string text = "[";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i)
        text += ",";
      if (g[i].is_string())
        text += "(" + g[i].get<std::string>() + ")";
      else if (g[i].is_number_unsigned() || g[i].is_number_integer())
        text += g[i].dump();
      else
        throw ParseError("coefficient entries must be integers or strings", 0);
    }
    text += "]";
    return parse_poly(text, ring);
  }
  throw ParseError("generator must be a string or an array", 0);
}

} // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring)
{
  return ExprParser(text, ring).parse();
}

std::vector<unsigned> parse_field_poly(std::string_view text)
{
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + pos)
      throw ParseError("expected a coefficient in field polynomial", pos);
    out.push_back(v);
    pos = std::size_t(ptr - text.data());
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == text.size())
      break;
    if (text[pos] != ',')
      throw ParseError("expected ',' in field polynomial", pos);
    ++pos;
  }
  return out;
}

CyclicCode code_from_json(const nlohmann::json& j)
{
  if (!j.is_object())
    throw ParseError("code file must hold a JSON object", 0);
  for (const char* key : {"ring", "n", "generators"})
    if (!j.contains(key))
      throw ParseError(std::string("code file lacks \"") + key + "\"", 0);
  std::vector<unsigned> fp;
  if (j.contains("field_poly")) {
    if (j["field_poly"].is_string())
      fp = parse_field_poly(j["field_poly"].get<std::string>());
    else
      fp = j["field_poly"].get<std::vector<unsigned>>();
  }
  if (!j["ring"].is_string())
    throw ParseError("\"ring\" must be a string", 0);
  RingPtr ring = ChainRing::make(parse_ring_spec(j["ring"].get<std::string>(), fp));
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw ParseError("\"n\" must be a positive integer", 0);
  const auto n = std::size_t(j["n"].get<long long>());
  if (!j["generators"].is_array())
    throw ParseError("\"generators\" must be an array", 0);
  std::vector<Poly> gens;
  for (const auto& g : j["generators"])
    gens.push_back(generator_from_json(g, ring));
  return CyclicCode(ring, n, std::move(gens));
}

CyclicCode load_code_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return code_from_json(j);
}

nlohmann::json code_to_json(const CyclicCode& code)
{
  nlohmann::json j;
  j["ring"] = code.ring()->name();
  if (code.ring()->m() > 1)
    j["field_poly"] = code.ring()->spec().field_modulus;
  j["n"] = code.n();
  j["generators"] = nlohmann::json::array();
  for (const auto& g : code.generators())
    j["generators"].push_back(to_string(g));
  return j;
}

} // namespace chaincodes
