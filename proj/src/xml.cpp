#include "xml.hpp"

#include <cctype>

namespace weblog::xml {

namespace {

char to_lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.' ||
           c == ':';
}

void append_utf8(std::string& out, unsigned long cp) {
    if (cp <= 0x7F) {
        out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7FF) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0xFFFF) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0x10FFFF) {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Strips an optional namespace prefix and lowercases.
std::string local_name(std::string_view qname) {
    auto pos = qname.rfind(':');
    if (pos != std::string_view::npos) qname.remove_prefix(pos + 1);
    std::string out;
    out.reserve(qname.size());
    for (char c : qname) out.push_back(to_lower(c));
    return out;
}

class Cursor {
public:
    explicit Cursor(std::string_view raw) : s_(raw) {}

    Node parse_document() {
        skip_bom();
        skip_misc();
        if (eof()) throw ParseError("document has no root element");
        Node root = parse_element();
        skip_misc();
        if (!eof()) throw ParseError("trailing content after root element");
        return root;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    bool starts_with(std::string_view p) const { return s_.substr(pos_, p.size()) == p; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void skip_bom() {
        if (starts_with("\xEF\xBB\xBF")) pos_ += 3;
    }

    void skip_until(std::string_view token, const char* what) {
        auto at = s_.find(token, pos_);
        if (at == std::string_view::npos) throw ParseError(std::string("unterminated ") + what);
        pos_ = at + token.size();
    }

    // Prolog, processing instructions, comments, DOCTYPE.
    void skip_misc() {
        for (;;) {
            skip_ws();
            if (starts_with("<?")) {
                skip_until("?>", "processing instruction");
            } else if (starts_with("<!--")) {
                skip_until("-->", "comment");
            } else if (starts_with("<!DOCTYPE") || starts_with("<!doctype")) {
                skip_doctype();
            } else {
                return;
            }
        }
    }

    void skip_doctype() {
        int depth = 0;
        while (!eof()) {
            char c = s_[pos_++];
            if (c == '<') ++depth;
            if (c == '>') {
                if (depth == 0) return;
                --depth;
            }
        }
        throw ParseError("unterminated DOCTYPE");
    }

    std::string read_name() {
        std::size_t start = pos_;
        while (!eof() && is_name_char(peek())) ++pos_;
        if (pos_ == start) throw ParseError("expected a tag name");
        return local_name(s_.substr(start, pos_ - start));
    }

    // Consumes attributes up to '>' or '/>'; returns true for self-closing.
    bool skip_attributes() {
        while (!eof()) {
            char c = peek();
            if (c == '"' || c == '\'') {
                ++pos_;
                auto at = s_.find(c, pos_);
                if (at == std::string_view::npos) throw ParseError("unterminated attribute value");
                pos_ = at + 1;
            } else if (c == '>') {
                ++pos_;
                return false;
            } else if (starts_with("/>")) {
                pos_ += 2;
                return true;
            } else {
                ++pos_;
            }
        }
        throw ParseError("unterminated start tag");
    }

    Node parse_element() {
        if (eof() || peek() != '<') throw ParseError("expected an element");
        ++pos_;
        Node node;
        node.name = read_name();
        if (skip_attributes()) return node;
        // content until the matching end tag
        for (;;) {
            if (eof()) throw ParseError("missing end tag for <" + node.name + ">");
            if (starts_with("<![CDATA[")) {
                pos_ += 9;
                auto at = s_.find("]]>", pos_);
                if (at == std::string_view::npos) throw ParseError("unterminated CDATA section");
                node.texts.back().append(s_.substr(pos_, at - pos_));
                pos_ = at + 3;
            } else if (starts_with("<!--")) {
                skip_until("-->", "comment");
            } else if (starts_with("<?")) {
                skip_until("?>", "processing instruction");
            } else if (starts_with("</")) {
                pos_ += 2;
                std::string closing = read_name();
                skip_ws();
                if (eof() || peek() != '>') throw ParseError("malformed end tag </" + closing + ">");
                ++pos_;
                if (closing != node.name)
                    throw ParseError("mismatched end tag: expected </" + node.name + ">, got </" +
                                     closing + ">");
                return node;
            } else if (peek() == '<') {
                node.children.push_back(parse_element());
                node.texts.emplace_back();
            } else {
                std::size_t start = pos_;
                while (!eof() && peek() != '<') ++pos_;
                node.texts.back().append(decode_entities(s_.substr(start, pos_ - start)));
            }
        }
    }
};

}  // namespace

const Node* Node::child(std::string_view name) const {
    for (const Node& c : children)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<const Node*> Node::children_named(std::string_view name) const {
    std::vector<const Node*> out;
    for (const Node& c : children)
        if (c.name == name) out.push_back(&c);
    return out;
}

std::string Node::deep_text() const {
    std::string out = texts.front();
    for (std::size_t i = 0; i < children.size(); ++i) {
        out += children[i].deep_text();
        out += texts[i + 1];
    }
    return out;
}

std::string decode_entities(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '&') {
            out.push_back(text[i++]);
            continue;
        }
        auto end = text.find(';', i + 1);
        if (end == std::string_view::npos || end - i > 12) {
            out.push_back(text[i++]);
            continue;
        }
        std::string_view body = text.substr(i + 1, end - i - 1);
        if (body == "amp") {
            out.push_back('&');
        } else if (body == "lt") {
            out.push_back('<');
        } else if (body == "gt") {
            out.push_back('>');
        } else if (body == "quot") {
            out.push_back('"');
        } else if (body == "apos") {
            out.push_back('\'');
        } else if (body.size() >= 2 && body[0] == '#') {
            bool hex = body[1] == 'x' || body[1] == 'X';
            unsigned long cp = 0;
            bool ok = body.size() > (hex ? 2u : 1u);
            for (std::size_t d = hex ? 2 : 1; d < body.size() && ok; ++d) {
                char c = body[d];
                int v;
                if (c >= '0' && c <= '9') v = c - '0';
                else if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
                else if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
                else { ok = false; break; }
                cp = cp * (hex ? 16 : 10) + static_cast<unsigned long>(v);
                if (cp > 0x10FFFF) ok = false;
            }
            if (!ok) {
                out.push_back(text[i++]);
                continue;
            }
            append_utf8(out, cp);
        } else {
            out.push_back(text[i++]);
            continue;
        }
        i = end + 1;
    }
    return out;
}

Node parse(std::string_view raw) { return Cursor(raw).parse_document(); }

}  // namespace weblog::xml
