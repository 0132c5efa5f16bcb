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
#ifndef CHAINCODES_ERROR_HPP
#define CHAINCODES_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chaincodes {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings.
class RingMismatchError : public Error
{
public:
  using Error::Error;
};

/// Inversion or division by an element that is not a unit.
class NotAUnitError : public Error
{
public:
  using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error
{
public:
  using Error::Error;
};

/// An exhaustive method would exceed its configured cap.
class CapExceededError : public Error
{
public:
  using Error::Error;
};

/// Malformed ring spec, polynomial expression or code file.
class ParseError : public Error
{
public:
  ParseError(const std::string& msg, std::size_t position) :
      Error(msg + " (at offset " + std::to_string(position) + ")"),
      position_(position)
  {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace chaincodes

#endif // CHAINCODES_ERROR_HPP
