#include "btds/lab/predicate.hpp"

#include <cctype>
#include <vector>

#include "btds/errors.hpp"

namespace btds::lab {

struct Predicate::Node {
    enum class Kind { ident, not_, and_, or_ } kind = Kind::ident;
    std::string name;
    std::shared_ptr<const Node> left, right;
};

namespace {

struct Token {
    enum class Kind { ident, and_, or_, not_, lparen, rparen, end } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(') {
            out.push_back({Token::Kind::lparen, "("});
            ++i;
            continue;
        }
        if (c == ')') {
            out.push_back({Token::Kind::rparen, ")"});
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                                    s[j] == '_' || s[j] == '@' || s[j] == '-')) {
                ++j;
            }
            const std::string word = s.substr(i, j - i);
            if (word == "AND") {
                out.push_back({Token::Kind::and_, word});
            } else if (word == "OR") {
                out.push_back({Token::Kind::or_, word});
            } else if (word == "NOT") {
                out.push_back({Token::Kind::not_, word});
            } else {
                out.push_back({Token::Kind::ident, word});
            }
            i = j;
            continue;
        }
        throw PredicateError("predicate: unexpected character '" + std::string(1, c) +
                             "' at position " + std::to_string(i));
    }
    out.push_back({Token::Kind::end, ""});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, std::set<std::string>& idents)
        : tokens_(std::move(tokens)), idents_(idents) {}

    std::shared_ptr<const Predicate::Node> parse() {
        auto node = parse_or();
        expect(Token::Kind::end, "end of input");
        return node;
    }

  private:
    using NodePtr = std::shared_ptr<const Predicate::Node>;

    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    void expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) {
            throw PredicateError("predicate: expected " + what + " near '" +
                                 peek().text + "'");
        }
        ++pos_;
    }

    NodePtr parse_or() {
        NodePtr left = parse_and();
        while (peek().kind == Token::Kind::or_) {
            take();
            auto node = std::make_shared<Predicate::Node>();
            node->kind = Predicate::Node::Kind::or_;
            node->left = left;
            node->right = parse_and();
            left = node;
        }
        return left;
    }

    NodePtr parse_and() {
        NodePtr left = parse_unary();
        while (peek().kind == Token::Kind::and_) {
            take();
            auto node = std::make_shared<Predicate::Node>();
            node->kind = Predicate::Node::Kind::and_;
            node->left = left;
            node->right = parse_unary();
            left = node;
        }
        return left;
    }

    NodePtr parse_unary() {
        if (peek().kind == Token::Kind::not_) {
            take();
            auto node = std::make_shared<Predicate::Node>();
            node->kind = Predicate::Node::Kind::not_;
            node->left = parse_unary();
            return node;
        }
        if (peek().kind == Token::Kind::lparen) {
            take();
            auto node = parse_or();
            expect(Token::Kind::rparen, "')'");
            return node;
        }
        if (peek().kind == Token::Kind::ident) {
            auto node = std::make_shared<Predicate::Node>();
            node->kind = Predicate::Node::Kind::ident;
            node->name = take().text;
            idents_.insert(node->name);
            return node;
        }
        throw PredicateError("predicate: expected a property name near '" +
                             peek().text + "'");
    }

    std::vector<Token> tokens_;
    std::set<std::string>& idents_;
    size_t pos_ = 0;
};

bool eval_node(const Predicate::Node& node, const std::map<std::string, bool>& props) {
    switch (node.kind) {
        case Predicate::Node::Kind::ident: {
            const auto it = props.find(node.name);
            if (it == props.end()) {
                throw PredicateError("predicate: unknown property '" + node.name + "'");
            }
            return it->second;
        }
        case Predicate::Node::Kind::not_:
            return !eval_node(*node.left, props);
        case Predicate::Node::Kind::and_:
            return eval_node(*node.left, props) && eval_node(*node.right, props);
        case Predicate::Node::Kind::or_:
            return eval_node(*node.left, props) || eval_node(*node.right, props);
    }
    return false;
}

}  // namespace

Predicate Predicate::parse(const std::string& text) {
    Predicate p;
    p.text_ = text;
    Parser parser(tokenize(text), p.idents_);
    p.root_ = parser.parse();
    return p;
}

bool Predicate::eval(const std::map<std::string, bool>& props) const {
    return eval_node(*root_, props);
}

}  // namespace btds::lab
