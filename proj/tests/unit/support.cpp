#include "support.hpp"

#include <doctest.h>

namespace wrat::test {

const Algebra &algebra(const std::string &name) {
    static std::map<std::string, std::unique_ptr<Algebra>> cache;
    auto &slot = cache[name];
    if (!slot) {
        auto rs = RootSystem::build(SimpleType::parse(name));
        auto table = ChevalleyTable::build(rs);
        slot = std::make_unique<Algebra>(Algebra{std::move(rs), std::move(table)});
    }
    return *slot;
}

OrbitRecord record(const std::string &algebra_name, const std::string &label) {
    auto rec = lookup_exceptional_label(SimpleType::parse(algebra_name), label);
    REQUIRE_MESSAGE(rec.has_value(), algebra_name << " " << label);
    return *rec;
}

CartanElement e_diagram(const Rational &top, std::initializer_list<Rational> row) {
    std::vector<Rational> v(row);
    v.insert(v.begin() + 1, top);
    return {v};
}

std::vector<int> e_root(const std::string &label) {
    std::vector<int> out;
    int top = label.at(0) - '0';
    for (std::size_t i = 2; i < label.size(); ++i)
        out.push_back(label[i] - '0');
    out.insert(out.begin() + 1, top);
    return out;
}

} // namespace wrat::test
