#ifndef BTDS_LAB_PREDICATE_HPP
#define BTDS_LAB_PREDICATE_HPP

#include <map>
#include <memory>
#include <set>
#include <string>

namespace btds::lab {

// Boolean combinations of property names: AND, OR, NOT, parentheses.
// Identifiers are matched exactly against the atlas property names.
class Predicate {
  public:
    struct Node;

    static Predicate parse(const std::string& text);

    bool eval(const std::map<std::string, bool>& props) const;

    // Identifiers the expression mentions.
    const std::set<std::string>& identifiers() const { return idents_; }

    const std::string& text() const { return text_; }

  private:
    std::shared_ptr<const Node> root_;
    std::set<std::string> idents_;
    std::string text_;
};

}  // namespace btds::lab

#endif
