#include "xcsp3/parser.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "reader.hpp"
#include "text.hpp"
#include "xcsp3/error.hpp"

namespace xcsp3 {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Usage, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !text::is_letter(s[0])) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return text::is_letter(c) || text::is_digit(c) || c == '_'; });
}

void check_identifier(std::string_view id) {
  if (!is_identifier(id)) throw Error(ErrorKind::Syntax, "'" + std::string(id) + "' is not a valid identifier");
  if (is_keyword(id)) throw Error(ErrorKind::ReservedIdentifier, "'" + std::string(id) + "' is a reserved keyword");
}

std::vector<std::string> split_classes(std::string_view s) {
  std::vector<std::string> out;
  for (auto t : text::split_ws(s)) out.emplace_back(t);
  return out;
}

bool is_empty_element(const RawElement& e) { return e.children.empty() && text::trim(e.text).empty(); }

std::vector<std::int64_t> parse_size(std::string_view s) {
  std::vector<std::int64_t> dims;
  auto bad = [&] { return Error(ErrorKind::BadSize, "malformed size '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  if (s[0] != '[') {
    // bare integer, read as a single dimension
    std::int64_t n = 0;
    try {
      n = text::parse_int(s, ErrorKind::BadSize);
    } catch (const Error&) {
      throw bad();
    }
    if (n <= 0) throw bad();
    return {n};
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '[') throw bad();
    auto close = s.find(']', pos);
    if (close == std::string_view::npos) throw bad();
    auto inside = s.substr(pos + 1, close - pos - 1);
    if (inside.empty() || !std::all_of(inside.begin(), inside.end(), text::is_digit)) throw bad();
    auto n = text::parse_int(inside, ErrorKind::BadSize);
    if (n <= 0) throw bad();
    dims.push_back(n);
    pos = close + 1;
  }
  return dims;
}

std::string rename_prefix(std::string_view tokens, const std::string& from, const std::string& to) {
  std::vector<std::string> out;
  for (auto t : text::split_ws(tokens)) {
    if (t.starts_with(from + "["))
      out.push_back(to + std::string(t.substr(from.size())));
    else
      out.emplace_back(t);
  }
  return text::join(out, " ");
}

// Largest %k index in `s` (or -1) and whether %... occurs.
std::int64_t scan_params(std::string_view s, bool& rest, bool& rest_in_expr) {
  std::int64_t best = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') continue;
    if (s.substr(i + 1, 3) == "...") {
      rest = true;
      // a token containing '(' is an expression or a tuple
      auto b = s.find_last_of(" \t\n\r", i);
      b = b == std::string_view::npos ? 0 : b + 1;
      auto e = s.find_first_of(" \t\n\r", i);
      auto tok = s.substr(b, e == std::string_view::npos ? std::string_view::npos : e - b);
      if (tok.find('(') != std::string_view::npos) rest_in_expr = true;
      continue;
    }
    std::size_t j = i + 1;
    while (j < s.size() && text::is_digit(s[j])) ++j;
    if (j == i + 1) continue;
    best = std::max(best, text::parse_int(s.substr(i + 1, j - i - 1)));
  }
  return best;
}

std::int64_t scan_tree(const RawElement& e, bool& rest, bool& rest_in_expr) {
  std::int64_t best = scan_params(e.text, rest, rest_in_expr);
  if (e.tag == "function" || e.tag == "intension") {
    bool r = false, dummy = false;
    scan_params(e.text, r, dummy);
    if (r) rest_in_expr = true;
  }
  for (const auto& c : e.children) best = std::max(best, scan_tree(c, rest, rest_in_expr));
  return best;
}

std::string substitute_text(std::string_view s, const std::vector<std::string>& args, std::size_t fixed) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') {
      out += s[i];
      continue;
    }
    if (s.substr(i + 1, 3) == "...") {
      std::vector<std::string> rest(args.begin() + static_cast<std::ptrdiff_t>(fixed), args.end());
      out += text::join(rest, " ");
      i += 3;
      continue;
    }
    std::size_t j = i + 1;
    while (j < s.size() && text::is_digit(s[j])) ++j;
    if (j == i + 1) {
      out += '%';
      continue;
    }
    auto k = static_cast<std::size_t>(text::parse_int(s.substr(i + 1, j - i - 1)));
    if (k >= args.size()) throw Error(ErrorKind::MissingArgument, "no argument for %" + std::to_string(k));
    out += args[k];
    i = j - 1;
  }
  return out;
}

void substitute_tree(RawElement& e, const std::vector<std::string>& args, std::size_t fixed) {
  e.text = substitute_text(e.text, args, fixed);
  for (auto& c : e.children) substitute_tree(c, args, fixed);
}

bool is_meta(std::string_view tag) { return tag == "group" || tag == "slide" || tag == "block"; }

void check_meta_attrs(const RawElement& e, std::initializer_list<std::string_view> extra) {
  for (const auto& [k, v] : e.attributes) {
    if (k == "id" || k == "class" || k == "note") continue;
    if (std::find(extra.begin(), extra.end(), k) == extra.end())
      throw Error(ErrorKind::UnknownElement, "attribute '" + k + "' is not supported on <" + e.tag + ">");
  }
}

RawElement make_member(const RawElement& tmpl, const RawElement& meta, std::size_t i, std::vector<std::string> args,
                       std::size_t fixed) {
  RawElement m = tmpl;
  substitute_tree(m, args, fixed);
  m.remove_attr("id");
  if (const auto* id = meta.attr("id")) m.set_attr("id", *id + "[" + std::to_string(i) + "]");
  if (!m.attr("note") && meta.attr("note")) m.set_attr("note", *meta.attr("note"));
  assign_paths(m, meta.path, i + 1);
  m.line = tmpl.line;
  return m;
}

}  // namespace

std::vector<RawElement> expand_group(const RawElement& group, const Instance& inst) {
  check_meta_attrs(group, {});
  const RawElement* tmpl = nullptr;
  std::vector<const RawElement*> args;
  for (const auto& c : group.children) {
    if (c.tag == "args") {
      if (!tmpl) throw Error(ErrorKind::Structure, "the template of a group comes before its <args>");
      args.push_back(&c);
    } else if (tmpl) {
      throw Error(ErrorKind::Structure, "a group has exactly one template");
    } else {
      tmpl = &c;
    }
  }
  if (!tmpl) throw Error(ErrorKind::Structure, "a group requires a template");
  if (is_meta(tmpl->tag)) throw Error(ErrorKind::NestedTemplate, "<" + tmpl->tag + "> cannot be a group template");
  if (args.empty()) throw Error(ErrorKind::Structure, "a group requires at least one <args>");
  bool rest = false, rest_in_expr = false;
  auto maxp = scan_tree(*tmpl, rest, rest_in_expr);
  if (rest_in_expr) throw Error(ErrorKind::RestInsideExpression, "%... cannot occur inside an expression");
  auto fixed = static_cast<std::size_t>(maxp + 1);
  std::vector<RawElement> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!args[i]->attributes.empty()) throw Error(ErrorKind::UnknownElement, "<args> takes no attributes");
    auto toks = detail::expand_tokens(args[i]->text, inst);
    if (rest ? toks.size() < fixed : toks.size() != fixed)
      throw Error(ErrorKind::ArityMismatch, "args #" + std::to_string(i) + " has " + std::to_string(toks.size()) +
                                                " value(s) but the template expects " + (rest ? "at least " : "") +
                                                std::to_string(fixed),
                  args[i]->where());
    out.push_back(make_member(*tmpl, group, i, std::move(toks), fixed));
  }
  return out;
}

std::vector<RawElement> expand_slide(const RawElement& slide, const Instance& inst) {
  check_meta_attrs(slide, {"circular"});
  auto circ = slide.attr_or("circular", "false");
  if (circ != "true" && circ != "false") throw Error(ErrorKind::Syntax, "circular must be true or false");
  struct SlideList {
    std::vector<std::string> vars;
    std::int64_t offset = 1;
    std::int64_t collect = 1;
    bool has_collect = false;
  };
  std::vector<SlideList> lists;
  const RawElement* tmpl = nullptr;
  for (const auto& c : slide.children) {
    if (c.tag == "list") {
      if (tmpl) throw Error(ErrorKind::Structure, "the lists of a slide come before its template");
      SlideList l;
      l.vars = detail::expand_tokens(c.text, inst);
      for (const auto& [k, v] : c.attributes) {
        auto n = text::parse_int(v);
        if (n <= 0) throw Error(ErrorKind::Structure, k + " must be positive");
        if (k == "offset") l.offset = n;
        else if (k == "collect") l.collect = n, l.has_collect = true;
        else throw Error(ErrorKind::UnknownElement, "attribute '" + k + "' is not supported on <list>");
      }
      lists.push_back(std::move(l));
    } else if (tmpl) {
      throw Error(ErrorKind::Structure, "a slide has exactly one template");
    } else {
      tmpl = &c;
    }
  }
  if (lists.empty()) throw Error(ErrorKind::Structure, "a slide requires a <list>");
  if (!tmpl) throw Error(ErrorKind::Structure, "a slide requires a template");
  if (is_meta(tmpl->tag)) throw Error(ErrorKind::NestedTemplate, "<" + tmpl->tag + "> cannot be a slide template");
  if (tmpl->tag != "intension" && tmpl->tag != "extension")
    throw Error(ErrorKind::TemplateNotCore, "a slide template must be intension or extension, not <" + tmpl->tag + ">");
  bool rest = false, rest_in_expr = false;
  auto q = scan_tree(*tmpl, rest, rest_in_expr) + 1;
  if (rest) throw Error(ErrorKind::RestInSlide, "%... cannot occur in a slide template");
  if (q <= 0) throw Error(ErrorKind::ArityMismatch, "the slide template has no parameter");
  bool circular = circ == "true";
  std::vector<std::vector<std::string>> windows;
  if (lists.size() == 1) {
    const auto& l = lists[0];
    if (l.has_collect && l.collect != q)
      throw Error(ErrorKind::ArityMismatch, "collect does not match the template arity " + std::to_string(q));
    auto n = static_cast<std::int64_t>(l.vars.size());
    auto last = circular ? n - q + 1 : n - q;
    for (std::int64_t i = 0; i <= last; i += l.offset) {
      std::vector<std::string> w;
      for (std::int64_t k = 0; k < q; ++k) w.push_back(l.vars[static_cast<std::size_t>((i + k) % n)]);
      windows.push_back(std::move(w));
    }
  } else {
    if (circular) throw Error(ErrorKind::Structure, "circular is only supported for a slide over one list");
    std::int64_t total = 0;
    std::int64_t count = -1;
    for (const auto& l : lists) {
      total += l.collect;
      auto n = static_cast<std::int64_t>(l.vars.size());
      if (n < l.collect || (n - l.collect) % l.offset != 0)
        throw Error(ErrorKind::LengthMismatch, "a slide list leaves an incomplete final window");
      auto c = (n - l.collect) / l.offset + 1;
      if (count >= 0 && c != count) throw Error(ErrorKind::LengthMismatch, "slide lists are exhausted unevenly");
      count = c;
    }
    if (total != q)
      throw Error(ErrorKind::ArityMismatch, "the lists collect " + std::to_string(total) + " variables per step but the template expects " +
                                                std::to_string(q));
    for (std::int64_t i = 0; i < count; ++i) {
      std::vector<std::string> w;
      for (const auto& l : lists)
        for (std::int64_t k = 0; k < l.collect; ++k) w.push_back(l.vars[static_cast<std::size_t>(i * l.offset + k)]);
      windows.push_back(std::move(w));
    }
  }
  std::vector<RawElement> out;
  for (std::size_t i = 0; i < windows.size(); ++i)
    out.push_back(make_member(*tmpl, slide, i, std::move(windows[i]), static_cast<std::size_t>(q)));
  return out;
}

std::vector<FlatConstraint> flatten_blocks(const RawElement& constraints) {
  std::vector<FlatConstraint> out;
  auto walk = [&](auto&& self, const RawElement& parent, const std::vector<std::string>& inherited) -> void {
    for (const auto& c : parent.children) {
      auto classes = inherited;
      for (auto& k : split_classes(c.attr_or("class", ""))) classes.push_back(std::move(k));
      if (c.tag == "block") {
        try {
          check_meta_attrs(c, {});
        } catch (const Error& e) {
          throw e.located(c.where());
        }
        self(self, c, classes);
      } else {
        out.push_back(FlatConstraint{c, std::move(classes)});
      }
    }
  };
  walk(walk, constraints, {});
  return out;
}

void build_array(const RawElement& decl, Instance& inst) {
  VarArray arr;
  arr.id = decl.attr_or("id", "");
  arr.note = decl.attr_or("note", "");
  const auto* size = decl.attr("size");
  if (!size) throw Error(ErrorKind::BadSize, "array '" + arr.id + "' has no size");
  arr.dims = parse_size(*size);
  arr.first = static_cast<VarId>(inst.vars.size());
  auto n = arr.cell_count();
  if (n > 10'000'000) throw Error(ErrorKind::BadSize, "array '" + arr.id + "' is too large");
  auto array_index = static_cast<std::int32_t>(inst.arrays.size());
  std::vector<std::int64_t> idx(arr.dims.size(), 0);
  for (std::size_t c = 0; c < n; ++c) {
    std::string name = arr.id;
    for (auto i : idx) name += "[" + std::to_string(i) + "]";
    inst.vars.push_back(Variable{std::move(name), std::nullopt, "", array_index});
    for (std::size_t d = idx.size(); d-- > 0;) {
      if (++idx[d] < arr.dims[d]) break;
      idx[d] = 0;
    }
  }
  inst.arrays.push_back(arr);
  inst.reindex();
  auto domains = decl.children_named("domain");
  if (domains.size() != decl.children.size())
    throw Error(ErrorKind::UnknownElement, "an array holds a domain or <domain> elements only");
  if (domains.empty()) {
    Domain d = parse_domain(decl.text);
    for (std::size_t c = 0; c < n; ++c) inst.vars[static_cast<std::size_t>(arr.first) + c].domain = d;
    return;
  }
  if (!text::trim(decl.text).empty()) throw Error(ErrorKind::Syntax, "text outside the <domain> elements of an array");
  for (std::size_t k = 0; k < domains.size(); ++k) {
    const auto& de = *domains[k];
    try {
      for (const auto& [key, v] : de.attributes)
        if (key != "for") throw Error(ErrorKind::UnknownElement, "attribute '" + key + "' is not supported on <domain>");
      const auto* forv = de.attr("for");
      if (!forv) throw Error(ErrorKind::Structure, "<domain> requires a for attribute");
      Domain d = parse_domain(de.text);
      if (*forv == "others") {
        if (k + 1 != domains.size()) throw Error(ErrorKind::MisplacedOthers, "for=\"others\" must be the last <domain>");
        for (std::size_t c = 0; c < n; ++c) {
          auto& var = inst.vars[static_cast<std::size_t>(arr.first) + c];
          if (!var.domain) var.domain = d;
        }
        continue;
      }
      for (const auto& tok : text::split_ws(*forv))
        if (tok == "others") throw Error(ErrorKind::MisplacedOthers, "others must be alone in its for attribute");
      for (const auto& cell : detail::expand_tokens(*forv, inst)) {
        auto id = inst.find_var(cell);
        if (!id || inst.vars[static_cast<std::size_t>(*id)].array != array_index)
          throw Error(ErrorKind::UnknownVariable, "'" + cell + "' is not a cell of array '" + arr.id + "'");
        auto& var = inst.vars[static_cast<std::size_t>(*id)];
        if (var.domain) throw Error(ErrorKind::OverlappingFor, "cell '" + cell + "' is given two domains");
        var.domain = d;
      }
    } catch (const Error& e) {
      throw e.located(de.where());
    }
  }
}

namespace {

class DocumentParser {
 public:
  DocumentParser(const ParseOptions& opts, std::vector<std::string>& warnings) : opts_(opts), warnings_(warnings) {}

  Instance run(const RawElement& root) {
    if (root.tag != "instance") throw Error(ErrorKind::BadFramework, "the root element must be <instance>", root.where());
    if (root.attr_or("format", "") != "XCSP3")
      throw Error(ErrorKind::BadFramework, "format must be \"XCSP3\"", root.where());
    auto type = root.attr_or("type", "");
    if (type == "CSP")
      inst_.framework = Framework::CSP;
    else if (type == "COP")
      inst_.framework = Framework::COP;
    else
      throw Error(ErrorKind::BadFramework, "type must be CSP or COP, found \"" + type + "\"", root.where());
    for (const auto& [k, v] : root.attributes)
      if (k != "format" && k != "type") unknown("attribute '" + k + "' on <instance>", root);
    check_aliases_outside_variables(root);

    const RawElement* variables = nullptr;
    const RawElement* constraints = nullptr;
    const RawElement* objectives = nullptr;
    const RawElement* annotations = nullptr;
    for (const auto& c : root.children) {
      const RawElement** slot = c.tag == "variables"     ? &variables
                                : c.tag == "constraints" ? &constraints
                                : c.tag == "objectives"  ? &objectives
                                : c.tag == "annotations" ? &annotations
                                                         : nullptr;
      if (!slot) {
        unknown("element <" + c.tag + ">", c);
        continue;
      }
      if (*slot) throw Error(ErrorKind::Structure, "<" + c.tag + "> occurs twice", c.where());
      *slot = &c;
    }
    if (!variables) throw Error(ErrorKind::MissingVariables, "the instance declares no <variables>", root.where());
    read_variables(*variables);
    if (constraints) read_constraints(*constraints);
    read_objectives(objectives, root);
    if (annotations) read_annotations(*annotations);
    return std::move(inst_);
  }

 private:
  void unknown(const std::string& what, const RawElement& at) {
    if (opts_.strict) throw Error(ErrorKind::UnknownElement, what + " is not supported", at.where());
    warnings_.push_back(at.where() + ": " + what + " ignored");
  }

  void check_aliases_outside_variables(const RawElement& e, bool inside_variables = false) {
    for (const auto& c : e.children) {
      bool is_decl = inside_variables && (c.tag == "var" || c.tag == "array");
      if (c.attr("as") && !is_decl)
        throw Error(ErrorKind::AliasOnForbiddenElement, "attribute 'as' is only allowed on <var> and <array>", c.where());
      check_aliases_outside_variables(c, c.tag == "variables");
    }
  }

  void claim_id(const std::string& id, const RawElement& at) {
    if (!ids_.insert(id).second) throw Error(ErrorKind::DuplicateId, "id '" + id + "' is declared twice", at.where());
  }

  // Returns the declaration with alias content filled in.
  RawElement resolve_alias(const RawElement& e, const std::map<std::string, const RawElement*>& seen,
                           const std::set<std::string>& all_ids) {
    const auto* as = e.attr("as");
    if (!as) return e;
    if (!is_empty_element(e)) throw Error(ErrorKind::Structure, "an element with 'as' has no content of its own");
    auto it = seen.find(*as);
    if (it == seen.end()) {
      if (all_ids.count(*as)) throw Error(ErrorKind::ForwardAlias, "alias target '" + *as + "' is declared later");
      throw Error(ErrorKind::UnknownAliasTarget, "alias target '" + *as + "' does not exist");
    }
    const RawElement& target = *it->second;
    if (target.attr("as")) throw Error(ErrorKind::TransitiveAlias, "alias target '" + *as + "' is itself an alias");
    if (target.tag != e.tag) throw Error(ErrorKind::Structure, "alias target '" + *as + "' is a <" + target.tag + ">");
    RawElement out = e;
    out.remove_attr("as");
    out.text = target.text;
    out.children = target.children;
    if (!out.attr("size") && target.attr("size")) out.set_attr("size", *target.attr("size"));
    const auto& new_id = out.attr_or("id", "");
    for (auto& c : out.children)
      if (const auto* f = c.attr("for"); f && *f != "others") c.set_attr("for", rename_prefix(*f, *as, new_id));
    return out;
  }

  void read_variables(const RawElement& vars) {
    if (!vars.attributes.empty()) unknown("attributes on <variables>", vars);
    std::set<std::string> all_ids;
    for (const auto& c : vars.children)
      if (const auto* id = c.attr("id")) all_ids.insert(*id);
    std::map<std::string, const RawElement*> seen;
    for (const auto& c : vars.children) {
      try {
        if (c.tag != "var" && c.tag != "array") {
          unknown("element <" + c.tag + "> in <variables>", c);
          continue;
        }
        const auto* id = c.attr("id");
        if (!id) throw Error(ErrorKind::Syntax, "<" + c.tag + "> requires an id");
        check_identifier(*id);
        claim_id(*id, c);
        for (const auto& [k, v] : c.attributes) {
          bool ok = k == "id" || k == "note" || k == "as" || (k == "type" && v == "integer") ||
                    (c.tag == "array" && (k == "size" || (k == "startIndex" && v == "0")));
          if (!ok) throw Error(ErrorKind::UnknownElement, "attribute " + k + "=\"" + v + "\" is not supported on <" + c.tag + ">");
        }
        RawElement decl = resolve_alias(c, seen, all_ids);
        seen.emplace(*id, &c);
        if (c.tag == "var") {
          if (!decl.children.empty()) throw Error(ErrorKind::UnknownElement, "a <var> holds a domain only");
          Variable v{*id, parse_domain(decl.text), decl.attr_or("note", ""), -1};
          inst_.vars.push_back(std::move(v));
          inst_.reindex();
        } else {
          build_array(decl, inst_);
        }
      } catch (const Error& e) {
        throw e.located(c.where());
      }
    }
  }

  bool dropped(const std::vector<std::string>& classes) const {
    for (const auto& k : classes)
      if (std::find(opts_.drop_classes.begin(), opts_.drop_classes.end(), k) != opts_.drop_classes.end()) return true;
    return false;
  }

  void add_constraint(const RawElement& e, std::vector<std::string> classes) {
    if (dropped(classes)) return;
    if (e.tag == "args" || e.tag == "list") throw Error(ErrorKind::Structure, "<" + e.tag + "> outside a group or slide");
    Constraint c;
    c.id = e.attr_or("id", "");
    c.note = e.attr_or("note", "");
    c.classes = std::move(classes);
    try {
      c.kind = read_constraint(e, inst_, opts_.strict);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::UnknownElement && !opts_.strict) {
        warnings_.push_back(e.where() + ": " + err.detail() + "; constraint ignored");
        return;
      }
      throw;
    }
    validate_structure(c.kind);
    c.scope = compute_scope(c.kind);
    inst_.constraints.push_back(std::move(c));
  }

  void read_constraints(const RawElement& cons) {
    if (!cons.attributes.empty()) unknown("attributes on <constraints>", cons);
    for (auto& flat : flatten_blocks(cons)) {
      const auto& e = flat.element;
      try {
        if (const auto* id = e.attr("id")) claim_id(*id, e);
        if (e.tag == "group" || e.tag == "slide") {
          if (dropped(flat.classes)) continue;
          auto members = e.tag == "group" ? expand_group(e, inst_) : expand_slide(e, inst_);
          for (const auto& m : members) {
            auto classes = flat.classes;
            // the template's own classes were not seen by flatten_blocks
            for (auto& k : split_classes(m.attr_or("class", ""))) classes.push_back(std::move(k));
            try {
              if (const auto* id = m.attr("id")) claim_id(*id, m);
              add_constraint(m, std::move(classes));
            } catch (const Error& err) {
              throw err.located(m.where());
            }
          }
        } else {
          add_constraint(e, flat.classes);
        }
      } catch (const Error& err) {
        throw err.located(e.where());
      }
    }
  }

  void read_objectives(const RawElement* objs, const RawElement& root) {
    if (!objs) {
      if (inst_.framework == Framework::COP)
        throw Error(ErrorKind::ObjectiveCount, "a COP requires exactly one objective", root.where());
      return;
    }
    if (inst_.framework == Framework::CSP)
      throw Error(ErrorKind::BadFramework, "a CSP cannot declare objectives", objs->where());
    for (const auto& [k, v] : objs->attributes) unknown("attribute '" + k + "' on <objectives>", *objs);
    std::vector<const RawElement*> found;
    for (const auto& c : objs->children) {
      if (c.tag != "minimize" && c.tag != "maximize") {
        unknown("element <" + c.tag + "> in <objectives>", c);
        continue;
      }
      found.push_back(&c);
    }
    if (found.size() != 1)
      throw Error(ErrorKind::ObjectiveCount,
                  "a COP requires exactly one objective, found " + std::to_string(found.size()), objs->where());
    try {
      if (const auto* id = found[0]->attr("id")) claim_id(*id, *found[0]);
      inst_.objective = detail::read_objective(*found[0], inst_);
    } catch (const Error& e) {
      throw e.located(found[0]->where());
    }
  }

  void read_annotations(const RawElement& ann) {
    for (const auto& c : ann.children) {
      if (c.tag != "decision") {
        unknown("annotation <" + c.tag + ">", c);
        continue;
      }
      try {
        if (inst_.decision) throw Error(ErrorKind::Structure, "<decision> occurs twice");
        if (!c.attributes.empty() || !c.children.empty()) throw Error(ErrorKind::UnknownElement, "<decision> holds a variable list only");
        inst_.decision = detail::read_var_list(c.text, inst_);
      } catch (const Error& e) {
        throw e.located(c.where());
      }
    }
  }

  const ParseOptions& opts_;
  std::vector<std::string>& warnings_;
  Instance inst_;
  std::set<std::string> ids_;
};

}  // namespace

ParseResult parse_document(std::string_view document, const ParseOptions& options) {
  ParseResult r;
  RawElement root = parse_xml(document);
  r.instance = DocumentParser(options, r.warnings).run(root);
  return r;
}

Instance parse_instance(std::string_view document, const ParseOptions& options) {
  return parse_document(document, options).instance;
}

Instance parse_instance_file(const std::string& path, const ParseOptions& options) {
  return parse_instance(read_file(path), options);
}

namespace {

std::vector<std::optional<std::int64_t>> solution_values(std::string_view s) {
  std::vector<std::optional<std::int64_t>> out;
  for (auto tok : text::split_ws(s)) {
    if (tok == "*") {
      out.push_back(std::nullopt);
      continue;
    }
    for (auto v : expand_vxk(std::vector<std::string_view>{tok})) out.push_back(v);
  }
  return out;
}

}  // namespace

Instantiation parse_solution(std::string_view s, const Instance& inst, const std::vector<std::string>& vars) {
  Instantiation sol;
  auto body = text::trim(s);
  std::vector<std::string> ids;
  std::vector<std::optional<std::int64_t>> values;
  if (body.starts_with("<")) {
    RawElement root = parse_xml(body);
    if (root.tag != "instantiation")
      throw Error(ErrorKind::Structure, "a solution is an <instantiation> element", root.where());
    for (const auto& [k, v] : root.attributes) {
      if (k == "type") sol.type = v;
      else if (k == "cost") sol.cost = v;
      else if (k != "id") throw Error(ErrorKind::UnknownElement, "attribute '" + k + "' on <instantiation>", root.where());
    }
    const auto* list = root.child("list");
    const auto* vals = root.child("values");
    if (!list || !vals) throw Error(ErrorKind::Structure, "<instantiation> requires <list> and <values>", root.where());
    ids = detail::expand_tokens(list->text, inst);
    values = solution_values(vals->text);
  } else {
    if (vars.empty()) {
      auto useful = inst.useful();
      for (std::size_t v = 0; v < inst.vars.size(); ++v)
        if (useful[v]) ids.push_back(inst.vars[v].id);
    } else {
      for (const auto& v : vars)
        for (auto& id : detail::expand_tokens(v, inst)) ids.push_back(std::move(id));
    }
    values = solution_values(body);
  }
  if (ids.size() != values.size())
    throw Error(ErrorKind::LengthMismatch, std::to_string(ids.size()) + " variable(s) but " +
                                               std::to_string(values.size()) + " value(s)");
  for (std::size_t i = 0; i < ids.size(); ++i) sol.add(ids[i], values[i]);
  return sol;
}

}  // namespace xcsp3
