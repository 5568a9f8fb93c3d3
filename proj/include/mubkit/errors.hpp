// Copyright 2026 The mubkit Authors
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

#ifndef MUBKIT_ERRORS_HPP_
#define MUBKIT_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mubkit {

/// Bad input: non-prime characteristic, mismatched contexts, malformed specs.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size bound (field size, table order, clique nodes) was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ill-formed interchange file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected (S, N) pair in transversal validation. Carries the offending elements.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    kNotSubgroup,
    kNotIdeal,
    kNotNilpotent,
    kNotClosed,
    kNotTransversal,
  };

  ValidationError(Kind kind, std::vector<std::uint32_t> witness, const std::string& what)
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<std::uint32_t> witness_;
};

/// A structural identity that must hold by theory failed to hold.
class PropertyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A basis vector does not factor as a tensor product.
class NotAProduct : public std::runtime_error {
 public:
  NotAProduct(std::size_t vector_index, const std::string& what)
      : std::runtime_error(what), vector_index_(vector_index) {}
  std::size_t vector_index() const { return vector_index_; }

 private:
  std::size_t vector_index_;
};

/// Product vectors exist but their factors are not indexed consistently by (i, j).
class LabelingError : public std::runtime_error {
 public:
  LabelingError(std::size_t vector_index, const std::string& what)
      : std::runtime_error(what), vector_index_(vector_index) {}
  std::size_t vector_index() const { return vector_index_; }

 private:
  std::size_t vector_index_;
};

}  // namespace mubkit

#endif  // MUBKIT_ERRORS_HPP_
