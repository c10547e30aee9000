#include "xcsp3/xml.hpp"

#include <algorithm>
#include <map>

#include "text.hpp"
#include "xcsp3/error.hpp"

namespace xcsp3 {

const std::string* RawElement::attr(std::string_view name) const {
  for (const auto& [k, v] : attributes)
    if (k == name) return &v;
  return nullptr;
}

std::string RawElement::attr_or(std::string_view name, std::string_view fallback) const {
  const auto* v = attr(name);
  return v ? *v : std::string(fallback);
}

void RawElement::set_attr(std::string_view name, std::string value) {
  for (auto& [k, v] : attributes)
    if (k == name) {
      v = std::move(value);
      return;
    }
  attributes.emplace_back(std::string(name), std::move(value));
}

void RawElement::remove_attr(std::string_view name) {
  attributes.erase(std::remove_if(attributes.begin(), attributes.end(), [&](const auto& kv) { return kv.first == name; }),
                   attributes.end());
}

const RawElement* RawElement::child(std::string_view t) const {
  for (const auto& c : children)
    if (c.tag == t) return &c;
  return nullptr;
}

std::vector<const RawElement*> RawElement::children_named(std::string_view t) const {
  std::vector<const RawElement*> out;
  for (const auto& c : children)
    if (c.tag == t) out.push_back(&c);
  return out;
}

std::string RawElement::where() const {
  std::string out;
  if (line > 0) out = "line " + std::to_string(line);
  if (!path.empty()) out += (out.empty() ? "" : ", ") + path;
  return out;
}

void assign_paths(RawElement& e, const std::string& parent_path, std::size_t position) {
  e.path = parent_path + "/" + e.tag;
  if (const auto* id = e.attr("id"))
    e.path += "[@id='" + *id + "']";
  else if (position > 0)
    e.path += "[" + std::to_string(position) + "]";
  std::map<std::string, std::size_t> seen;
  for (auto& c : e.children) assign_paths(c, e.path, ++seen[c.tag]);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

class XmlReader {
 public:
  explicit XmlReader(std::string_view s) : s_(s) {}

  RawElement document() {
    skip_misc();
    if (!at("<")) error("expected a root element");
    RawElement root = element();
    skip_misc();
    if (pos_ != s_.size()) error("content after the root element");
    assign_paths(root, "", 0);
    return root;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw Error(ErrorKind::Xml, msg, "line " + std::to_string(line_));
  }

  bool at(std::string_view p) const { return s_.substr(pos_, p.size()) == p; }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < s_.size(); ++i, ++pos_)
      if (s_[pos_] == '\n') ++line_;
  }

  void skip_until(std::string_view end, const char* what) {
    auto p = s_.find(end, pos_);
    if (p == std::string_view::npos) error(std::string("unterminated ") + what);
    advance(p + end.size() - pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && text::is_space(s_[pos_])) advance(1);
  }

  // Whitespace, comments, processing instructions and DOCTYPE.
  void skip_misc() {
    while (true) {
      skip_ws();
      if (at("<?"))
        skip_until("?>", "processing instruction");
      else if (at("<!--"))
        skip_until("-->", "comment");
      else if (at("<!DOCTYPE"))
        skip_doctype();
      else
        return;
    }
  }

  void skip_doctype() {
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      advance(1);
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == '>' && depth == 0) return;
    }
    error("unterminated DOCTYPE");
  }

  static bool name_char(char c) {
    return text::is_letter(c) || text::is_digit(c) || c == '_' || c == '-' || c == '.' || c == ':';
  }

  std::string name() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
    if (pos_ == b) error("expected a name");
    return std::string(s_.substr(b, pos_ - b));
  }

  std::string decode(std::string_view raw) {
    std::string out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      auto semi = raw.find(';', i);
      if (semi == std::string_view::npos) error("unterminated entity reference");
      auto ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "lt") out += '<';
      else if (ent == "gt") out += '>';
      else if (ent == "amp") out += '&';
      else if (ent == "quot") out += '"';
      else if (ent == "apos") out += '\'';
      else if (ent.starts_with("#")) {
        long code = 0;
        try {
          code = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X') ? std::stol(std::string(ent.substr(2)), nullptr, 16)
                                                                      : std::stol(std::string(ent.substr(1)));
        } catch (const std::exception&) {
          error("bad character reference &" + std::string(ent) + ";");
        }
        if (code < 0 || code > 127) error("only ASCII character references are supported");
        out += static_cast<char>(code);
      } else {
        error("unknown entity &" + std::string(ent) + ";");
      }
      i = semi;
    }
    return out;
  }

  RawElement element() {
    RawElement e;
    e.line = line_;
    advance(1);  // '<'
    e.tag = name();
    while (true) {
      skip_ws();
      if (at("/>")) {
        advance(2);
        return e;
      }
      if (at(">")) {
        advance(1);
        break;
      }
      std::string key = name();
      skip_ws();
      if (!at("=")) error("expected '=' after attribute '" + key + "'");
      advance(1);
      skip_ws();
      if (!at("\"") && !at("'")) error("attribute value must be quoted");
      char q = s_[pos_];
      advance(1);
      auto end = s_.find(q, pos_);
      if (end == std::string_view::npos) error("unterminated attribute value");
      std::string value = decode(s_.substr(pos_, end - pos_));
      advance(end + 1 - pos_);
      if (e.attr(key)) error("duplicate attribute '" + key + "'");
      if (!value.empty() && (text::is_space(value.front()) || text::is_space(value.back())))
        throw Error(ErrorKind::AttributeWhitespace,
                    "attribute " + key + "=\"" + value + "\" has leading or trailing whitespace",
                    "line " + std::to_string(e.line) + ", <" + e.tag + ">");
      e.attributes.emplace_back(std::move(key), std::move(value));
    }
    while (true) {
      if (pos_ >= s_.size()) error("unterminated element <" + e.tag + ">");
      if (at("</")) {
        advance(2);
        std::string closing = name();
        if (closing != e.tag) error("mismatched closing tag </" + closing + "> for <" + e.tag + ">");
        skip_ws();
        if (!at(">")) error("expected '>'");
        advance(1);
        return e;
      }
      if (at("<!--")) {
        skip_until("-->", "comment");
      } else if (at("<![CDATA[")) {
        advance(9);
        auto end = s_.find("]]>", pos_);
        if (end == std::string_view::npos) error("unterminated CDATA section");
        e.text += s_.substr(pos_, end - pos_);
        advance(end + 3 - pos_);
      } else if (at("<?")) {
        skip_until("?>", "processing instruction");
      } else if (at("<")) {
        e.children.push_back(element());
        // keep a separator so tokens on both sides of a child stay apart
        e.text += ' ';
      } else {
        auto end = s_.find('<', pos_);
        if (end == std::string_view::npos) end = s_.size();
        e.text += decode(s_.substr(pos_, end - pos_));
        advance(end - pos_);
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

RawElement parse_xml(std::string_view document) { return XmlReader(document).document(); }

}  // namespace xcsp3
