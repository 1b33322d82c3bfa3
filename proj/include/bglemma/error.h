// Copyright 2026 The bglemma Authors.
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

#ifndef BGLEMMA_ERROR_H_
#define BGLEMMA_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bglemma {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A packed tag with reserved bits set or an out-of-range field.
class InvalidTag : public Error {
 public:
  using Error::Error;
};

// A positional tag string that does not follow the tag grammar.
class MalformedTag : public Error {
 public:
  using Error::Error;
};

// A line-oriented input file contains a malformed line. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateType : public Error {
 public:
  explicit DuplicateType(const std::string& type_id)
      : Error("duplicate paradigm type '" + type_id + "'"), type_id_(type_id) {}
  const std::string& type_id() const { return type_id_; }

 private:
  std::string type_id_;
};

class InvalidRule : public Error {
 public:
  using Error::Error;
};

class UnknownType : public Error {
 public:
  explicit UnknownType(const std::string& type_id)
      : Error("unknown paradigm type '" + type_id + "'"), type_id_(type_id) {}
  const std::string& type_id() const { return type_id_; }

 private:
  std::string type_id_;
};

class LemmaTooShort : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Bad magic, unsupported version, truncation or checksum mismatch.
class FormatError : public Error {
 public:
  using Error::Error;
};

class DecompressError : public Error {
 public:
  using Error::Error;
};

class XmlError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class EmptyDictionary : public Error {
 public:
  using Error::Error;
};

// Violated precondition on an argument value.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace bglemma

#endif  // BGLEMMA_ERROR_H_
