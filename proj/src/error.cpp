#include "xcsp3/error.hpp"

namespace xcsp3 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Xml: return "XmlError";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::AttributeWhitespace: return "AttributeWhitespace";
    case ErrorKind::ConditionWhitespace: return "ConditionWhitespace";
    case ErrorKind::ExpressionWhitespace: return "ExpressionWhitespace";
    case ErrorKind::IntervalWhitespace: return "IntervalWhitespace";
    case ErrorKind::TupleWhitespace: return "TupleWhitespace";
    case ErrorKind::DomainOutOfOrder: return "DomainOutOfOrder";
    case ErrorKind::MalformedInterval: return "MalformedInterval";
    case ErrorKind::MalformedCompactToken: return "MalformedCompactToken";
    case ErrorKind::UnknownArray: return "UnknownArray";
    case ErrorKind::IndexOutOfBounds: return "IndexOutOfBounds";
    case ErrorKind::NotMatrix: return "NotMatrix";
    case ErrorKind::Arity: return "ArityError";
    case ErrorKind::UnresolvedOperand: return "UnresolvedOperand";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::StarInScope: return "StarInScope";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::MissingArgument: return "MissingArgument";
    case ErrorKind::RestInsideExpression: return "RestInsideExpression";
    case ErrorKind::BadFramework: return "BadFramework";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::ReservedIdentifier: return "ReservedIdentifier";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::MissingVariables: return "MissingVariables";
    case ErrorKind::ObjectiveCount: return "ObjectiveCountError";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::OverlappingFor: return "OverlappingFor";
    case ErrorKind::MisplacedOthers: return "MisplacedOthers";
    case ErrorKind::UnknownAliasTarget: return "UnknownAliasTarget";
    case ErrorKind::ForwardAlias: return "ForwardAlias";
    case ErrorKind::TransitiveAlias: return "TransitiveAlias";
    case ErrorKind::AliasOnForbiddenElement: return "AliasOnForbiddenElement";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::RestInSlide: return "RestInSlide";
    case ErrorKind::TemplateNotCore: return "TemplateNotCore";
    case ErrorKind::NestedTemplate: return "NestedTemplate";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TableOrder: return "TableOrder";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UndefinedVariable: return "UndefinedVariable";
    case ErrorKind::ValueOutsideDomain: return "ValueOutsideDomain";
    case ErrorKind::CostMismatch: return "CostMismatch";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::NotFunctional: return "NotFunctional";
    case ErrorKind::Structure: return "StructureError";
    case ErrorKind::Usage: return "UsageError";
  }
  return "Error";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, const std::string& where) {
  std::string out;
  if (!where.empty()) {
    out += where;
    out += ": ";
  }
  out += to_string(kind);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::string where)
    : std::runtime_error(compose(kind, message, where)),
      kind_(kind),
      detail_(std::move(message)),
      where_(std::move(where)) {}

Error Error::located(const std::string& where) const {
  if (!where_.empty()) return *this;
  return Error(kind_, detail_, where);
}

void fail(ErrorKind kind, std::string message) { throw Error(kind, std::move(message)); }

}  // namespace xcsp3
