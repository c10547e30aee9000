#include <algorithm>
#include <initializer_list>

#include "reader.hpp"
#include "text.hpp"
#include "xcsp3/error.hpp"
#include "xcsp3/parser.hpp"

namespace xcsp3 {
namespace detail {

std::vector<std::vector<std::string_view>> split_tuples(std::string_view s) {
  std::vector<std::vector<std::string_view>> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < s.size() && text::is_space(s[pos])) ++pos;
    if (pos == s.size()) return out;
    if (s[pos] != '(') throw Error(ErrorKind::Syntax, "expected '(' in tuple list near '" + std::string(s.substr(pos, 20)) + "'");
    auto close = s.find(')', pos);
    if (close == std::string_view::npos) throw Error(ErrorKind::Syntax, "unclosed tuple");
    auto inside = s.substr(pos + 1, close - pos - 1);
    if (text::has_space(inside))
      throw Error(ErrorKind::TupleWhitespace, "whitespace inside tuple '(" + std::string(inside) + ")'");
    if (inside.find('(') != std::string_view::npos) throw Error(ErrorKind::Syntax, "nested '(' in tuple");
    std::vector<std::string_view> fields;
    std::size_t b = 0;
    while (true) {
      auto comma = inside.find(',', b);
      auto f = inside.substr(b, comma == std::string_view::npos ? std::string_view::npos : comma - b);
      if (f.empty()) throw Error(ErrorKind::Syntax, "empty field in tuple '(" + std::string(inside) + ")'");
      fields.push_back(f);
      if (comma == std::string_view::npos) break;
      b = comma + 1;
    }
    out.push_back(std::move(fields));
    pos = close + 1;
  }
}

std::vector<std::string> expand_tokens(std::string_view s, const Instance& inst) {
  std::vector<std::string> out;
  for (auto tok : text::split_ws(s)) {
    if (is_compact_token(tok) && tok.find('(') == std::string_view::npos && tok.find('[') != std::string_view::npos) {
      auto cells = expand_compact_list(tok, inst);
      out.insert(out.end(), cells.begin(), cells.end());
    } else {
      out.emplace_back(tok);
    }
  }
  return out;
}

namespace {

enum class Allowed { Vars, Ints, VarsOrInts, Exprs };

class Reader {
 public:
  Reader(const RawElement& e, const Instance& inst) : e_(e), inst_(inst) {}

  void attrs(std::initializer_list<std::string_view> extra) const {
    for (const auto& [k, v] : e_.attributes) {
      if (k == "id" || k == "class" || k == "note") continue;
      if (std::find(extra.begin(), extra.end(), k) == extra.end())
        throw Error(ErrorKind::UnknownElement, "attribute '" + k + "' is not supported on <" + e_.tag + ">");
    }
  }

  void children(std::initializer_list<std::string_view> allowed) const {
    for (const auto& c : e_.children) {
      if (std::find(allowed.begin(), allowed.end(), c.tag) == allowed.end())
        throw Error(ErrorKind::UnknownElement, "element <" + c.tag + "> is not supported inside <" + e_.tag + ">");
      for (const auto& [k, v] : c.attributes)
        if (!(c.tag == "values" && k == "closed") && !(k == "startIndex" && v == "0") &&
            !(c.tag == "list" && k == "offset") && !(c.tag == "list" && k == "collect"))
          throw Error(ErrorKind::UnknownElement, "attribute '" + k + "' is not supported on <" + c.tag + ">");
    }
  }

  const RawElement& need(std::string_view tag) const {
    auto all = e_.children_named(tag);
    if (all.empty()) throw Error(ErrorKind::Structure, "<" + e_.tag + "> requires a <" + std::string(tag) + "> element");
    if (all.size() > 1) throw Error(ErrorKind::Structure, "<" + e_.tag + "> has several <" + std::string(tag) + "> elements");
    return *all.front();
  }

  const RawElement* opt(std::string_view tag) const {
    auto all = e_.children_named(tag);
    if (all.size() > 1) throw Error(ErrorKind::Structure, "<" + e_.tag + "> has several <" + std::string(tag) + "> elements");
    return all.empty() ? nullptr : all.front();
  }

  bool simplified() const { return e_.children.empty(); }

  Expr operand(std::string_view tok, Allowed allowed) const {
    Expr ex = parse_operand(tok);
    if (allowed == Allowed::Ints && !ex.is_const())
      throw Error(ErrorKind::Syntax, "expected an integer, found '" + std::string(tok) + "'");
    if (allowed == Allowed::Vars && !ex.is_var())
      throw Error(ErrorKind::Syntax, "expected a variable, found '" + std::string(tok) + "'");
    if (allowed == Allowed::VarsOrInts && !ex.is_var() && !ex.is_const())
      throw Error(ErrorKind::Syntax, "expected a variable or an integer, found '" + std::string(tok) + "'");
    bind(ex);
    return ex;
  }

  void bind(Expr& ex) const {
    bool rest = false;
    if (max_param(ex, &rest) >= 0 || rest)
      throw Error(ErrorKind::Syntax, "parameter outside a group or slide template in '" + print(ex) + "'");
    resolve(ex, [&](const std::string& name) { return inst_.find_var(name); });
    std::vector<VarId> ids;
    collect_var_ids(ex, ids);
    for (auto v : ids)
      if (!inst_.vars[static_cast<std::size_t>(v)].domain)
        throw Error(ErrorKind::UndefinedVariable, "variable '" + inst_.vars[static_cast<std::size_t>(v)].id +
                                                      "' has no domain and cannot be referenced");
  }

  Operands operands(std::string_view s, Allowed allowed) const {
    Operands out;
    for (const auto& tok : expand_tokens(s, inst_)) {
      if (allowed != Allowed::Vars && text::looks_like_int(tok) == false && tok.find('x') != std::string::npos &&
          !tok.empty() && (text::is_digit(tok[0]) || tok[0] == '-') && tok.find('(') == std::string::npos) {
        for (auto v : expand_vxk(std::vector<std::string_view>{tok})) out.push_back(Expr::constant(v));
        continue;
      }
      out.push_back(operand(tok, allowed));
    }
    return out;
  }

  Matrix matrix(std::string_view s, Allowed allowed) const {
    Matrix rows;
    if (s.find('(') != std::string_view::npos) {
      for (const auto& t : split_tuples(s)) {
        Operands row;
        for (auto f : t) row.push_back(operand(f, allowed));
        rows.push_back(std::move(row));
      }
      return rows;
    }
    for (auto tok : text::split_ws(s)) {
      for (const auto& names : expand_compact(tok, inst_, ListContext::Matrix)) {
        Operands row;
        for (const auto& n : names) row.push_back(operand(n, allowed));
        rows.push_back(std::move(row));
      }
    }
    return rows;
  }

  std::vector<std::int64_t> ints(std::string_view s) const { return expand_vxk(s); }

  Condition condition(std::string_view s) const {
    Condition c = parse_condition(text::trim(s));
    if (auto* ex = std::get_if<Expr>(&c.operand)) bind(*ex);
    return c;
  }

  static CondOp relational(std::string_view s) {
    auto t = text::trim(s);
    auto op = cond_op_from_name(t);
    if (!op || *op == CondOp::Eq || *op == CondOp::Ne || *op == CondOp::In || *op == CondOp::NotIn)
      throw Error(ErrorKind::Syntax, "operator must be lt, le, ge or gt, found '" + std::string(t) + "'");
    return *op;
  }

  Expr single(std::string_view s, Allowed allowed) const {
    auto toks = text::split_ws(s);
    if (toks.size() != 1) throw Error(ErrorKind::Structure, "expected exactly one value in <" + e_.tag + ">");
    return operand(toks[0], allowed);
  }

  const RawElement& e_;
  const Instance& inst_;
};

ConstraintKind read_intension(const Reader& r) {
  r.attrs({});
  r.children({"function"});
  std::string_view body = r.simplified() ? std::string_view(r.e_.text) : std::string_view(r.need("function").text);
  if (!r.simplified() && !text::trim(r.e_.text).empty())
    throw Error(ErrorKind::Syntax, "text outside <function> in <intension>");
  Expr ex = parse_expr(text::trim(body));
  r.bind(ex);
  return Intension{std::move(ex)};
}

Tuple read_tuple(const std::vector<std::string_view>& fields) {
  Tuple t;
  for (auto f : fields) {
    if (f == "*")
      t.push_back(std::nullopt);
    else
      t.push_back(text::parse_int(f));
  }
  return t;
}

ConstraintKind read_extension(const Reader& r, bool strict) {
  r.attrs({});
  r.children({"list", "supports", "conflicts"});
  Extension ext;
  ext.list = r.operands(r.need("list").text, Allowed::Vars);
  const auto* sup = r.opt("supports");
  const auto* con = r.opt("conflicts");
  if ((sup != nullptr) == (con != nullptr))
    throw Error(ErrorKind::Structure, "<extension> requires exactly one of <supports> and <conflicts>");
  ext.supports = sup != nullptr;
  std::string_view body = sup ? sup->text : con->text;
  if (ext.list.size() == 1 && body.find('(') == std::string_view::npos) {
    ext.unary = parse_domain(body);
    return ext;
  }
  std::optional<std::size_t> prev;
  for (const auto& fields : split_tuples(body)) {
    if (fields.size() != ext.list.size())
      throw Error(ErrorKind::Structure, "tuple of arity " + std::to_string(fields.size()) + " for a list of " +
                                            std::to_string(ext.list.size()) + " variables");
    ext.tuples.push_back(read_tuple(fields));
    const Tuple& cur = ext.tuples.back();
    bool plain = std::all_of(cur.begin(), cur.end(), [](const TableValue& v) { return v.has_value(); });
    if (!plain) continue;
    if (strict && prev && !(ext.tuples[*prev] < cur))
      throw Error(ErrorKind::TableOrder, "tuples must be in strictly increasing lexicographic order");
    prev = ext.tuples.size() - 1;
  }
  return ext;
}

std::vector<Transition> read_transitions(std::string_view s) {
  std::vector<Transition> out;
  for (const auto& f : split_tuples(s)) {
    if (f.size() != 3) throw Error(ErrorKind::Structure, "a transition has three fields");
    out.push_back(Transition{std::string(f[0]), text::parse_int(f[1]), std::string(f[2])});
  }
  return out;
}

ConstraintKind read_regular(const Reader& r) {
  r.attrs({});
  r.children({"list", "transitions", "start", "final"});
  Regular reg;
  reg.list = r.operands(r.need("list").text, Allowed::Vars);
  reg.transitions = read_transitions(r.need("transitions").text);
  auto start = text::split_ws(r.need("start").text);
  if (start.size() != 1) throw Error(ErrorKind::Structure, "<start> holds exactly one state");
  reg.start = std::string(start[0]);
  for (auto f : text::split_ws(r.need("final").text)) reg.finals.emplace_back(f);
  return reg;
}

ConstraintKind read_mdd(const Reader& r) {
  r.attrs({});
  r.children({"list", "transitions"});
  Mdd m;
  m.list = r.operands(r.need("list").text, Allowed::Vars);
  m.transitions = read_transitions(r.need("transitions").text);
  return m;
}

std::vector<std::vector<std::int64_t>> int_tuples(std::string_view s) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& f : split_tuples(s)) {
    std::vector<std::int64_t> t;
    for (auto v : f) t.push_back(text::parse_int(v));
    out.push_back(std::move(t));
  }
  return out;
}

ConstraintKind read_all_different(const Reader& r) {
  r.attrs({});
  if (r.simplified()) return AllDifferent{r.operands(r.e_.text, Allowed::Exprs), {}};
  r.children({"list", "matrix", "except"});
  if (const auto* m = r.opt("matrix")) {
    if (!r.e_.children_named("list").empty() || r.opt("except"))
      throw Error(ErrorKind::Structure, "<matrix> cannot be combined with <list> or <except> in <allDifferent>");
    return AllDifferentMatrix{r.matrix(m->text, Allowed::Vars)};
  }
  auto lists = r.e_.children_named("list");
  const auto* ex = r.opt("except");
  if (lists.size() == 1) {
    AllDifferent a{r.operands(lists[0]->text, Allowed::Exprs), {}};
    if (ex) a.except = r.ints(ex->text);
    return a;
  }
  if (lists.empty()) throw Error(ErrorKind::Structure, "<allDifferent> requires a list");
  AllDifferentLists a;
  for (const auto* l : lists) a.lists.push_back(r.operands(l->text, Allowed::Vars));
  if (ex) a.except = int_tuples(ex->text);
  return a;
}

ConstraintKind read_all_equal(const Reader& r) {
  r.attrs({});
  if (r.simplified()) return AllEqual{r.operands(r.e_.text, Allowed::Exprs)};
  r.children({"list"});
  return AllEqual{r.operands(r.need("list").text, Allowed::Exprs)};
}

ConstraintKind read_ordered(const Reader& r) {
  r.attrs({"case"});
  if (const auto* c = r.e_.attr("case")) {
    if (!r.simplified()) throw Error(ErrorKind::Structure, "the case attribute requires the simplified form of <ordered>");
    CondOp op;
    if (*c == "increasing") op = CondOp::Le;
    else if (*c == "strictlyIncreasing") op = CondOp::Lt;
    else if (*c == "decreasing") op = CondOp::Ge;
    else if (*c == "strictlyDecreasing") op = CondOp::Gt;
    else throw Error(ErrorKind::Syntax, "unknown ordered case '" + *c + "'");
    return Ordered{r.operands(r.e_.text, Allowed::Vars), {}, op};
  }
  r.children({"list", "lengths", "operator"});
  Ordered o;
  o.list = r.operands(r.need("list").text, Allowed::Vars);
  if (const auto* l = r.opt("lengths")) o.lengths = r.operands(l->text, Allowed::VarsOrInts);
  o.op = Reader::relational(r.need("operator").text);
  return o;
}

ConstraintKind read_lex(const Reader& r) {
  r.attrs({});
  r.children({"list", "matrix", "operator"});
  CondOp op = Reader::relational(r.need("operator").text);
  if (const auto* m = r.opt("matrix")) {
    if (!r.e_.children_named("list").empty()) throw Error(ErrorKind::Structure, "<lex> mixes <list> and <matrix>");
    return LexMatrix{r.matrix(m->text, Allowed::Vars), op};
  }
  Lex lex;
  lex.op = op;
  for (const auto* l : r.e_.children_named("list")) lex.lists.push_back(r.operands(l->text, Allowed::Vars));
  return lex;
}

ConstraintKind read_sum(const Reader& r) {
  r.attrs({});
  r.children({"list", "coeffs", "condition"});
  Sum s;
  s.list = r.operands(r.need("list").text, Allowed::Exprs);
  if (const auto* c = r.opt("coeffs")) s.coeffs = r.operands(c->text, Allowed::VarsOrInts);
  s.condition = r.condition(r.need("condition").text);
  return s;
}

ConstraintKind read_count(const Reader& r) {
  r.attrs({});
  r.children({"list", "values", "condition"});
  Count c;
  c.list = r.operands(r.need("list").text, Allowed::Exprs);
  c.values = r.operands(r.need("values").text, Allowed::VarsOrInts);
  c.condition = r.condition(r.need("condition").text);
  return c;
}

ConstraintKind read_nvalues(const Reader& r) {
  r.attrs({});
  r.children({"list", "except", "condition"});
  NValues n;
  n.list = r.operands(r.need("list").text, Allowed::Exprs);
  if (const auto* e = r.opt("except")) n.except = r.ints(e->text);
  n.condition = r.condition(r.need("condition").text);
  return n;
}

ConstraintKind read_cardinality(const Reader& r) {
  r.attrs({});
  r.children({"list", "values", "occurs"});
  Cardinality c;
  c.list = r.operands(r.need("list").text, Allowed::Exprs);
  const auto& values = r.need("values");
  c.values = r.operands(values.text, Allowed::VarsOrInts);
  auto closed = values.attr_or("closed", "false");
  if (closed != "true" && closed != "false") throw Error(ErrorKind::Syntax, "closed must be true or false");
  c.closed = closed == "true";
  for (const auto& tok : r.e_.children_named("occurs").empty() ? std::vector<std::string>{}
                                                                  : expand_tokens(r.need("occurs").text, r.inst_)) {
    if (tok.find("..") != std::string::npos && tok.find('[') == std::string::npos)
      c.occurs.emplace_back(parse_interval(tok));
    else
      c.occurs.emplace_back(r.operand(tok, Allowed::VarsOrInts));
  }
  if (r.e_.children_named("occurs").empty()) throw Error(ErrorKind::Structure, "<cardinality> requires <occurs>");
  if (c.occurs.size() != c.values.size())
    throw Error(ErrorKind::Structure, "<values> and <occurs> of <cardinality> differ in length");
  return c;
}

template <typename T>
ConstraintKind read_extremum(const Reader& r) {
  r.attrs({});
  r.children({"list", "condition"});
  return T{r.operands(r.need("list").text, Allowed::Exprs), r.condition(r.need("condition").text)};
}

ElementRhs element_rhs(const Reader& r) {
  const auto* value = r.opt("value");
  const auto* cond = r.opt("condition");
  if ((value != nullptr) == (cond != nullptr))
    throw Error(ErrorKind::Structure, "<element> requires exactly one of <value> and <condition>");
  if (value) return r.single(value->text, Allowed::VarsOrInts);
  return r.condition(cond->text);
}

ConstraintKind read_element(const Reader& r) {
  r.attrs({});
  r.children({"list", "matrix", "index", "value", "condition"});
  if (const auto* m = r.opt("matrix")) {
    ElementMatrix em;
    em.matrix = r.matrix(m->text, Allowed::VarsOrInts);
    auto idx = text::split_ws(r.need("index").text);
    if (idx.size() != 2) throw Error(ErrorKind::Structure, "<index> of a matrix element holds two values");
    em.row = r.operand(idx[0], Allowed::VarsOrInts);
    em.col = r.operand(idx[1], Allowed::VarsOrInts);
    em.rhs = element_rhs(r);
    return em;
  }
  Element el;
  el.list = r.operands(r.need("list").text, Allowed::VarsOrInts);
  el.index = r.single(r.need("index").text, Allowed::VarsOrInts);
  el.rhs = element_rhs(r);
  return el;
}

ConstraintKind read_channel(const Reader& r) {
  r.attrs({});
  if (r.simplified()) return Channel{r.operands(r.e_.text, Allowed::Vars)};
  r.children({"list", "value"});
  auto lists = r.e_.children_named("list");
  if (lists.size() == 1 && !r.opt("value")) return Channel{r.operands(lists[0]->text, Allowed::Vars)};
  if (lists.size() == 1) return ChannelValue{r.operands(lists[0]->text, Allowed::Vars), r.single(r.need("value").text, Allowed::Vars)};
  if (lists.size() == 2 && !r.opt("value"))
    return ChannelLists{r.operands(lists[0]->text, Allowed::Vars), r.operands(lists[1]->text, Allowed::Vars)};
  throw Error(ErrorKind::Structure, "unsupported <channel> form");
}

ConstraintKind read_no_overlap(const Reader& r) {
  r.attrs({"zeroIgnored"});
  r.children({"origins", "lengths"});
  auto zi = r.e_.attr_or("zeroIgnored", "true");
  if (zi != "true" && zi != "false") throw Error(ErrorKind::Syntax, "zeroIgnored must be true or false");
  const auto& origins = r.need("origins").text;
  const auto& lengths = r.need("lengths").text;
  bool boxes = origins.find('(') != std::string::npos ||
               std::ranges::any_of(text::split_ws(origins), [&](std::string_view t) {
                 auto open = t.find('[');
                 const auto* a = open == std::string_view::npos ? nullptr : r.inst_.find_array(t.substr(0, open));
                 return a && a->dims.size() == 2 && std::ranges::count(t, '[') == 2 && t.find("[]") != std::string_view::npos &&
                        t.substr(t.rfind('[')) == "[]";
               });
  if (boxes)
    return NoOverlapBoxes{r.matrix(origins, Allowed::Vars), r.matrix(lengths, Allowed::VarsOrInts), zi == "true"};
  return NoOverlap{r.operands(origins, Allowed::Vars), r.operands(lengths, Allowed::VarsOrInts), zi == "true"};
}

ConstraintKind read_cumulative(const Reader& r) {
  r.attrs({});
  r.children({"origins", "lengths", "heights", "condition"});
  Cumulative c;
  c.origins = r.operands(r.need("origins").text, Allowed::Vars);
  c.lengths = r.operands(r.need("lengths").text, Allowed::VarsOrInts);
  c.heights = r.operands(r.need("heights").text, Allowed::VarsOrInts);
  c.condition = r.condition(r.need("condition").text);
  return c;
}

ConstraintKind read_circuit(const Reader& r) {
  r.attrs({"startIndex"});
  if (auto s = r.e_.attr("startIndex"); s && *s != "0")
    throw Error(ErrorKind::Structure, "only startIndex=\"0\" is supported");
  if (r.simplified()) return Circuit{r.operands(r.e_.text, Allowed::Vars), std::nullopt};
  r.children({"list", "size"});
  Circuit c;
  c.list = r.operands(r.need("list").text, Allowed::Vars);
  if (const auto* s = r.opt("size")) c.size = r.single(s->text, Allowed::VarsOrInts);
  return c;
}

ConstraintKind read_instantiation(const Reader& r) {
  r.attrs({});
  r.children({"list", "values"});
  InstantiationCtr in;
  in.list = r.operands(r.need("list").text, Allowed::Vars);
  in.values = r.ints(r.need("values").text);
  if (in.values.size() != in.list.size())
    throw Error(ErrorKind::LengthMismatch, "<list> and <values> of <instantiation> differ in length");
  return in;
}

}  // namespace

Objective read_objective(const RawElement& e, const Instance& inst) {
  Reader r(e, inst);
  r.attrs({"type"});
  Objective obj;
  obj.id = e.attr_or("id", "");
  obj.note = e.attr_or("note", "");
  if (e.tag == "minimize")
    obj.sense = Sense::Minimize;
  else if (e.tag == "maximize")
    obj.sense = Sense::Maximize;
  else
    throw Error(ErrorKind::UnknownElement, "element <" + e.tag + "> is not an objective");
  auto type = e.attr_or("type", "expression");
  if (type == "expression") {
    r.children({});
    obj.type = ObjectiveType::Expression;
    obj.expr = parse_expr(text::trim(e.text));
    r.bind(obj.expr);
    return obj;
  }
  if (type == "sum") obj.type = ObjectiveType::Sum;
  else if (type == "minimum") obj.type = ObjectiveType::Minimum;
  else if (type == "maximum") obj.type = ObjectiveType::Maximum;
  else if (type == "nValues") obj.type = ObjectiveType::NValues;
  else if (type == "lex") obj.type = ObjectiveType::Lex;
  else throw Error(ErrorKind::UnknownElement, "objective type '" + type + "' is not supported");
  if (r.simplified()) {
    obj.list = r.operands(e.text, Allowed::Exprs);
  } else {
    r.children({"list", "coeffs"});
    obj.list = r.operands(r.need("list").text, Allowed::Exprs);
    if (const auto* c = r.opt("coeffs")) {
      obj.coeffs = r.ints(c->text);
      if (obj.coeffs.size() != obj.list.size())
        throw Error(ErrorKind::LengthMismatch, "<list> and <coeffs> of the objective differ in length");
    }
  }
  if (obj.list.empty()) throw Error(ErrorKind::Structure, "the objective list is empty");
  return obj;
}

std::vector<VarId> read_var_list(std::string_view s, const Instance& inst) {
  RawElement dummy;
  dummy.tag = "decision";
  Reader r(dummy, inst);
  std::vector<VarId> out;
  for (const auto& ex : r.operands(s, Allowed::Vars)) out.push_back(static_cast<VarId>(ex.value));
  return out;
}

}  // namespace detail

ConstraintKind read_constraint(const RawElement& e, const Instance& inst, bool strict) {
  using namespace detail;
  Reader r(e, inst);
  const auto& t = e.tag;
  if (t == "intension") return read_intension(r);
  if (t == "extension") return read_extension(r, strict);
  if (t == "regular") return read_regular(r);
  if (t == "mdd") return read_mdd(r);
  if (t == "allDifferent") return read_all_different(r);
  if (t == "allEqual") return read_all_equal(r);
  if (t == "ordered") return read_ordered(r);
  if (t == "lex") return read_lex(r);
  if (t == "sum") return read_sum(r);
  if (t == "count") return read_count(r);
  if (t == "nValues") return read_nvalues(r);
  if (t == "cardinality") return read_cardinality(r);
  if (t == "minimum") return read_extremum<Minimum>(r);
  if (t == "maximum") return read_extremum<Maximum>(r);
  if (t == "element") return read_element(r);
  if (t == "channel") return read_channel(r);
  if (t == "noOverlap") return read_no_overlap(r);
  if (t == "cumulative") return read_cumulative(r);
  if (t == "circuit") return read_circuit(r);
  if (t == "instantiation") return read_instantiation(r);
  throw Error(ErrorKind::UnknownElement, "constraint <" + t + "> is not supported");
}

}  // namespace xcsp3
