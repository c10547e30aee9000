#include "xcsp3/writer.hpp"

#include <map>
#include <sstream>

#include "text.hpp"
#include "xcsp3/xml.hpp"

namespace xcsp3 {

namespace {

std::string pad(int n) { return std::string(static_cast<std::size_t>(n), ' '); }

std::string join_exprs(const Operands& ops) {
  std::string out;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i) out += ' ';
    out += print(ops[i]);
  }
  return out;
}

std::string join_ints(const std::vector<std::int64_t>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string tuples(const Matrix& m) {
  std::string out;
  for (const auto& row : m) {
    out += '(';
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + print(row[i]);
    out += ')';
  }
  return out;
}

std::string int_tuples(const std::vector<std::vector<std::int64_t>>& m) {
  std::string out;
  for (const auto& row : m) {
    out += '(';
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + std::to_string(row[i]);
    out += ')';
  }
  return out;
}

std::string table(const std::vector<Tuple>& ts) {
  std::string out;
  for (const auto& t : ts) {
    out += '(';
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + (t[i] ? std::to_string(*t[i]) : std::string("*"));
    out += ')';
  }
  return out;
}

std::string transitions(const std::vector<Transition>& ts) {
  std::string out;
  for (const auto& t : ts) out += "(" + t.from + "," + std::to_string(t.value) + "," + t.to + ")";
  return out;
}

class Body {
 public:
  explicit Body(int indent) : indent_(indent) {}

  void child(std::string_view tag, const std::string& content, const std::string& attrs = "") {
    out_ += pad(indent_ + 2) + "<" + std::string(tag) + attrs + "> " + xml_escape(content) + " </" + std::string(tag) + ">\n";
  }

  std::string str() const { return out_; }

 private:
  int indent_;
  std::string out_;
};

std::string cond(const Condition& c) { return format_condition(c); }

std::string rhs(const ElementRhs& r, Body& b) {
  if (const auto* e = std::get_if<Expr>(&r))
    b.child("value", print(*e));
  else
    b.child("condition", cond(std::get<Condition>(r)));
  return {};
}

// Returns the tag, extra attributes and inner elements of a constraint.
struct Parts {
  std::string tag;
  std::string attrs;
  std::string body;
};

Parts parts(const ConstraintKind& kind, int indent) {
  Body b(indent);
  Parts p;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Intension>) {
          p.tag = "intension";
          b.child("function", print(c.expr));
        } else if constexpr (std::is_same_v<T, Extension>) {
          p.tag = "extension";
          b.child("list", join_exprs(c.list));
          b.child(c.supports ? "supports" : "conflicts", c.unary ? c.unary->str() : table(c.tuples));
        } else if constexpr (std::is_same_v<T, Regular>) {
          p.tag = "regular";
          b.child("list", join_exprs(c.list));
          b.child("transitions", transitions(c.transitions));
          b.child("start", c.start);
          b.child("final", text::join(c.finals, " "));
        } else if constexpr (std::is_same_v<T, Mdd>) {
          p.tag = "mdd";
          b.child("list", join_exprs(c.list));
          b.child("transitions", transitions(c.transitions));
        } else if constexpr (std::is_same_v<T, AllDifferent>) {
          p.tag = "allDifferent";
          b.child("list", join_exprs(c.list));
          if (!c.except.empty()) b.child("except", join_ints(c.except));
        } else if constexpr (std::is_same_v<T, AllDifferentLists>) {
          p.tag = "allDifferent";
          for (const auto& l : c.lists) b.child("list", join_exprs(l));
          if (!c.except.empty()) b.child("except", int_tuples(c.except));
        } else if constexpr (std::is_same_v<T, AllDifferentMatrix>) {
          p.tag = "allDifferent";
          b.child("matrix", tuples(c.matrix));
        } else if constexpr (std::is_same_v<T, AllEqual>) {
          p.tag = "allEqual";
          b.child("list", join_exprs(c.list));
        } else if constexpr (std::is_same_v<T, Ordered>) {
          p.tag = "ordered";
          b.child("list", join_exprs(c.list));
          if (!c.lengths.empty()) b.child("lengths", join_exprs(c.lengths));
          b.child("operator", std::string(cond_op_name(c.op)));
        } else if constexpr (std::is_same_v<T, Lex>) {
          p.tag = "lex";
          for (const auto& l : c.lists) b.child("list", join_exprs(l));
          b.child("operator", std::string(cond_op_name(c.op)));
        } else if constexpr (std::is_same_v<T, LexMatrix>) {
          p.tag = "lex";
          b.child("matrix", tuples(c.matrix));
          b.child("operator", std::string(cond_op_name(c.op)));
        } else if constexpr (std::is_same_v<T, Sum>) {
          p.tag = "sum";
          b.child("list", join_exprs(c.list));
          if (!c.coeffs.empty()) b.child("coeffs", join_exprs(c.coeffs));
          b.child("condition", cond(c.condition));
        } else if constexpr (std::is_same_v<T, Count>) {
          p.tag = "count";
          b.child("list", join_exprs(c.list));
          b.child("values", join_exprs(c.values));
          b.child("condition", cond(c.condition));
        } else if constexpr (std::is_same_v<T, NValues>) {
          p.tag = "nValues";
          b.child("list", join_exprs(c.list));
          if (!c.except.empty()) b.child("except", join_ints(c.except));
          b.child("condition", cond(c.condition));
        } else if constexpr (std::is_same_v<T, Cardinality>) {
          p.tag = "cardinality";
          b.child("list", join_exprs(c.list));
          b.child("values", join_exprs(c.values), c.closed ? " closed=\"true\"" : "");
          std::string occ;
          for (std::size_t i = 0; i < c.occurs.size(); ++i) {
            if (i) occ += ' ';
            if (const auto* e = std::get_if<Expr>(&c.occurs[i]))
              occ += print(*e);
            else
              occ += format_interval(std::get<Interval>(c.occurs[i]));
          }
          b.child("occurs", occ);
        } else if constexpr (std::is_same_v<T, Minimum> || std::is_same_v<T, Maximum>) {
          p.tag = std::is_same_v<T, Minimum> ? "minimum" : "maximum";
          b.child("list", join_exprs(c.list));
          b.child("condition", cond(c.condition));
        } else if constexpr (std::is_same_v<T, Element>) {
          p.tag = "element";
          b.child("list", join_exprs(c.list));
          b.child("index", print(c.index));
          rhs(c.rhs, b);
        } else if constexpr (std::is_same_v<T, ElementMatrix>) {
          p.tag = "element";
          b.child("matrix", tuples(c.matrix));
          b.child("index", print(c.row) + " " + print(c.col));
          rhs(c.rhs, b);
        } else if constexpr (std::is_same_v<T, Channel>) {
          p.tag = "channel";
          b.child("list", join_exprs(c.list));
        } else if constexpr (std::is_same_v<T, ChannelLists>) {
          p.tag = "channel";
          b.child("list", join_exprs(c.first));
          b.child("list", join_exprs(c.second));
        } else if constexpr (std::is_same_v<T, ChannelValue>) {
          p.tag = "channel";
          b.child("list", join_exprs(c.list));
          b.child("value", print(c.value));
        } else if constexpr (std::is_same_v<T, NoOverlap>) {
          p.tag = "noOverlap";
          if (!c.zero_ignored) p.attrs = " zeroIgnored=\"false\"";
          b.child("origins", join_exprs(c.origins));
          b.child("lengths", join_exprs(c.lengths));
        } else if constexpr (std::is_same_v<T, NoOverlapBoxes>) {
          p.tag = "noOverlap";
          if (!c.zero_ignored) p.attrs = " zeroIgnored=\"false\"";
          b.child("origins", tuples(c.origins));
          b.child("lengths", tuples(c.lengths));
        } else if constexpr (std::is_same_v<T, Cumulative>) {
          p.tag = "cumulative";
          b.child("origins", join_exprs(c.origins));
          b.child("lengths", join_exprs(c.lengths));
          b.child("heights", join_exprs(c.heights));
          b.child("condition", cond(c.condition));
        } else if constexpr (std::is_same_v<T, Circuit>) {
          p.tag = "circuit";
          b.child("list", join_exprs(c.list));
          if (c.size) b.child("size", print(*c.size));
        } else if constexpr (std::is_same_v<T, InstantiationCtr>) {
          p.tag = "instantiation";
          b.child("list", join_exprs(c.list));
          b.child("values", join_ints(c.values));
        }
      },
      kind);
  p.body = b.str();
  return p;
}

std::string common_attrs(const std::string& id, const std::vector<std::string>& classes, const std::string& note) {
  std::string out;
  if (!id.empty()) out += " id=\"" + xml_escape(id) + "\"";
  if (!classes.empty()) out += " class=\"" + xml_escape(text::join(classes, " ")) + "\"";
  if (!note.empty()) out += " note=\"" + xml_escape(note) + "\"";
  return out;
}

std::string dims_text(const std::vector<std::int64_t>& dims) {
  std::string out;
  for (auto d : dims) out += "[" + std::to_string(d) + "]";
  return out;
}

void write_array(std::ostringstream& os, const Instance& inst, const VarArray& arr) {
  auto first = static_cast<std::size_t>(arr.first);
  auto n = arr.cell_count();
  os << "    <array" << common_attrs(arr.id, {}, arr.note) << " size=\"" << dims_text(arr.dims) << "\"";
  bool uniform = true;
  for (std::size_t c = 0; c < n; ++c)
    if (inst.vars[first + c].domain != inst.vars[first].domain) uniform = false;
  if (uniform && inst.vars[first].domain) {
    os << "> " << inst.vars[first].domain->str() << " </array>\n";
    return;
  }
  os << ">\n";
  std::vector<std::pair<Domain, std::vector<std::string>>> groups;
  for (std::size_t c = 0; c < n; ++c) {
    const auto& v = inst.vars[first + c];
    if (!v.domain) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == *v.domain; });
    if (it == groups.end()) {
      groups.emplace_back(*v.domain, std::vector<std::string>{});
      it = groups.end() - 1;
    }
    it->second.push_back(v.id);
  }
  for (const auto& [d, cells] : groups)
    os << "      <domain for=\"" << text::join(cells, " ") << "\"> " << d.str() << " </domain>\n";
  os << "    </array>\n";
}

}  // namespace

std::string write_constraint(const Constraint& c, int indent) {
  Parts p = parts(c.kind, indent);
  return pad(indent) + "<" + p.tag + common_attrs(c.id, c.classes, c.note) + p.attrs + ">\n" + p.body + pad(indent) +
         "</" + p.tag + ">\n";
}

std::string write_instance(const Instance& inst) {
  std::ostringstream os;
  os << "<instance format=\"XCSP3\" type=\"" << (inst.framework == Framework::COP ? "COP" : "CSP") << "\">\n";
  os << "  <variables>\n";
  std::size_t v = 0;
  while (v < inst.vars.size()) {
    const auto& var = inst.vars[v];
    if (var.array >= 0) {
      const auto& arr = inst.arrays[static_cast<std::size_t>(var.array)];
      write_array(os, inst, arr);
      v += arr.cell_count();
      continue;
    }
    os << "    <var" << common_attrs(var.id, {}, var.note) << "> " << (var.domain ? var.domain->str() : "")
       << " </var>\n";
    ++v;
  }
  os << "  </variables>\n";
  if (!inst.constraints.empty()) {
    os << "  <constraints>\n";
    for (const auto& c : inst.constraints) os << write_constraint(c, 4);
    os << "  </constraints>\n";
  }
  if (inst.objective) {
    const auto& o = *inst.objective;
    const char* tag = o.sense == Sense::Minimize ? "minimize" : "maximize";
    os << "  <objectives>\n    <" << tag << common_attrs(o.id, {}, o.note);
    if (o.type == ObjectiveType::Expression) {
      os << "> " << xml_escape(print(o.expr)) << " </" << tag << ">\n";
    } else {
      os << " type=\"" << objective_type_name(o.type) << "\">\n";
      os << "      <list> " << xml_escape(join_exprs(o.list)) << " </list>\n";
      if (!o.coeffs.empty()) os << "      <coeffs> " << join_ints(o.coeffs) << " </coeffs>\n";
      os << "    </" << tag << ">\n";
    }
    os << "  </objectives>\n";
  }
  if (inst.decision) {
    std::vector<std::string> names;
    for (auto id : *inst.decision) names.push_back(inst.vars[static_cast<std::size_t>(id)].id);
    os << "  <annotations>\n    <decision> " << text::join(names, " ") << " </decision>\n  </annotations>\n";
  }
  os << "</instance>\n";
  return os.str();
}

std::string write_solution(const Instance& inst, const Assignment& env, const std::optional<Cost>& cost, bool optimum) {
  auto useful = inst.useful();
  std::vector<std::string> names;
  std::vector<std::string> values;
  for (std::size_t v = 0; v < inst.vars.size(); ++v) {
    if (!useful[v]) continue;
    names.push_back(inst.vars[v].id);
    auto id = static_cast<VarId>(v);
    values.push_back(env.is_set(id) ? std::to_string(env.value(id)) : "*");
  }
  std::string out = "<instantiation type=\"";
  out += optimum ? "optimum" : "solution";
  out += "\"";
  if (cost) out += " cost=\"" + format_cost(*cost) + "\"";
  out += ">\n  <list> " + text::join(names, " ") + " </list>\n  <values> " + text::join(values, " ") + " </values>\n</instantiation>\n";
  return out;
}

}  // namespace xcsp3
