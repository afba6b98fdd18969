#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weblog/errors.hpp"

namespace weblog::xml {

class ParseError : public Error {
public:
    using Error::Error;
};

// Element tree with attributes dropped. Tag names are lowercased and
// namespace prefixes are stripped. Character data (entities decoded, CDATA
// verbatim) is kept segmented so mixed content stays in document order:
// texts[i] precedes children[i] and texts.back() trails the last child.
struct Node {
    std::string name;
    std::vector<std::string> texts{std::string()};
    std::vector<Node> children;

    const Node* child(std::string_view name) const;
    std::vector<const Node*> children_named(std::string_view name) const;

    // Character data of this node and all descendants, in document order.
    std::string deep_text() const;
};

Node parse(std::string_view raw);

// Decodes &amp; &lt; &gt; &quot; &apos; and numeric character references;
// anything unrecognized is kept verbatim.
std::string decode_entities(std::string_view text);

}  // namespace weblog::xml
