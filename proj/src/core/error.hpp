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

#ifndef TAME_CORE_ERROR_HPP
#define TAME_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tame {

// Base class for every error the kernel can raise.  Each concrete error
// maps onto one C-API status code.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A cap (variable count, degree, cell count, realization size) was exceeded.
// The kernel never degrades precision; it refuses instead.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

class ZeroPolynomialError : public Error {
public:
    ZeroPolynomialError() : Error("zero polynomial has no root set") {}
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

class ArityMismatchError : public Error {
public:
    explicit ArityMismatchError(const std::string& what) : Error(what) {}
};

class QuantifierPresentError : public Error {
public:
    QuantifierPresentError() : Error("formula must be quantifier-free") {}
};

class NotAFunctionError : public Error {
public:
    explicit NotAFunctionError(const std::string& what) : Error(what) {}
};

class DomainMismatchError : public Error {
public:
    explicit DomainMismatchError(const std::string& what) : Error(what) {}
};

class NotSurjectiveError : public Error {
public:
    explicit NotSurjectiveError(const std::string& what) : Error(what) {}
};

class NotPolytopeError : public Error {
public:
    explicit NotPolytopeError(const std::string& what) : Error(what) {}
};

class ExtensionRequiredError : public Error {
public:
    explicit ExtensionRequiredError(const std::string& what) : Error(what) {}
};

// Raised when a construction that certifies itself produced a certificate
// that does not hold.  Indicates a kernel bug, never a user error.
class CertificationFailedError : public Error {
public:
    explicit CertificationFailedError(const std::string& what) : Error(what) {}
};

class IndexOutOfRangeError : public Error {
public:
    explicit IndexOutOfRangeError(const std::string& what) : Error(what) {}
};

class IncompatibleFacesError : public Error {
public:
    explicit IncompatibleFacesError(const std::string& what) : Error(what) {}
};

class NotMonotoneError : public Error {
public:
    explicit NotMonotoneError(const std::string& what) : Error(what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

} // namespace tame

#endif
