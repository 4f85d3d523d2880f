#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grouploc
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A resource cap (element table, coset table, orbit, leaf budget) was hit.
/// Results that depend on the capped computation are indeterminate, never false.
class CapExceeded : public Error
{
public:
  CapExceeded(std::string what, std::string cap_name)
  : Error(std::move(what)), _cap(std::move(cap_name))
  {}

  std::string const &cap() const { return _cap; }

private:
  std::string _cap;
};

class DegreeMismatch : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  using Error::Error;
};

/// An operation was called outside of its documented domain.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

class MissingCatalogDatum : public Error
{
public:
  using Error::Error;
};

class ValidationError : public Error
{
public:
  ValidationError(std::string entry, std::string reason)
  : Error(entry + ": " + reason), _entry(std::move(entry)), _reason(std::move(reason))
  {}

  std::string const &entry() const { return _entry; }
  std::string const &reason() const { return _reason; }

private:
  std::string _entry;
  std::string _reason;
};

// presentation certification failures

class RelatorFails : public Error
{
public:
  explicit RelatorFails(std::size_t index)
  : Error("relator " + std::to_string(index) + " does not evaluate to the identity"),
    _index(index)
  {}

  std::size_t index() const { return _index; }

private:
  std::size_t _index;
};

class GenerationFails : public Error
{
public:
  using Error::Error;
};

class OrderMismatch : public Error
{
public:
  using Error::Error;
};

class UncertifiedPresentation : public Error
{
public:
  using Error::Error;
};

/// A published statement failed on an instance whose hypotheses were verified.
/// Always treated as an implementation defect.
class ConsistencyViolation : public Error
{
public:
  using Error::Error;
};

class NoLift : public ConsistencyViolation
{
public:
  using ConsistencyViolation::ConsistencyViolation;
};

class NonUniqueLift : public ConsistencyViolation
{
public:
  using ConsistencyViolation::ConsistencyViolation;
};

class ExtensionMissing : public ConsistencyViolation
{
public:
  using ConsistencyViolation::ConsistencyViolation;
};

class ExtensionNotUnique : public ConsistencyViolation
{
public:
  using ConsistencyViolation::ConsistencyViolation;
};

class HypothesisFails : public Error
{
public:
  using Error::Error;
};

} // namespace grouploc
