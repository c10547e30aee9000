#ifndef XCSP3_ERROR_HPP
#define XCSP3_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace xcsp3 {

// Every failure raised by the library carries one of these kinds. The name
// returned by to_string() is what diagnostics print, so keep them stable.
enum class ErrorKind {
  Xml,
  Syntax,
  AttributeWhitespace,
  ConditionWhitespace,
  ExpressionWhitespace,
  IntervalWhitespace,
  TupleWhitespace,
  DomainOutOfOrder,
  MalformedInterval,
  MalformedCompactToken,
  UnknownArray,
  IndexOutOfBounds,
  NotMatrix,
  Arity,
  UnresolvedOperand,
  UnboundVariable,
  StarInScope,
  DivisionByZero,
  NegativeExponent,
  Overflow,
  MissingArgument,
  RestInsideExpression,
  BadFramework,
  DuplicateId,
  ReservedIdentifier,
  UnknownElement,
  MissingVariables,
  ObjectiveCount,
  BadSize,
  OverlappingFor,
  MisplacedOthers,
  UnknownAliasTarget,
  ForwardAlias,
  TransitiveAlias,
  AliasOnForbiddenElement,
  ArityMismatch,
  RestInSlide,
  TemplateNotCore,
  NestedTemplate,
  LengthMismatch,
  TableOrder,
  UnknownVariable,
  UndefinedVariable,
  ValueOutsideDomain,
  CostMismatch,
  EmptyDomain,
  NotFunctional,
  Structure,
  Usage,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string where = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& where() const noexcept { return where_; }
  const std::string& detail() const noexcept { return detail_; }

  // Returns a copy located at `where`, unless a location is already set.
  Error located(const std::string& where) const;

 private:
  ErrorKind kind_;
  std::string detail_;
  std::string where_;
};

[[noreturn]] void fail(ErrorKind kind, std::string message);

}  // namespace xcsp3

#endif
