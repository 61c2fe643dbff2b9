/*
 *  Copyright (C) 2026  The elpkit authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#ifndef ELP_ERROR_HPP
#define ELP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Raised when an enumeration would exceed a configured size cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Raised when an operation is applied outside its domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace elp

#endif
