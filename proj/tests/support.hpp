#pragma once

#include <string>

#include "quiverhh/algebra.hpp"
#include "quiverhh/presentation.hpp"

inline std::string bundled(const std::string& name)
{
    return std::string(QUIVERHH_QUIVER_DIR) + "/" + name;
}

inline quiverhh::Algebra load(const std::string& name)
{
    return quiverhh::Algebra(quiverhh::load_presentation(bundled(name)));
}

inline quiverhh::Algebra parse(const std::string& text)
{
    return quiverhh::Algebra(quiverhh::parse_presentation(text));
}

inline std::size_t arrow(const quiverhh::Algebra& a, const std::string& name)
{
    return *a.quiver().find_arrow(name);
}

inline quiverhh::Path path(const quiverhh::Algebra& a, std::initializer_list<const char*> names)
{
    std::vector<std::size_t> ids;
    for (const char* n : names)
        ids.push_back(arrow(a, n));
    return quiverhh::Path::of_arrows(a.quiver(), ids);
}

inline std::size_t basis_index(const quiverhh::Algebra& a, std::initializer_list<const char*> names)
{
    return *a.basis().index_of(path(a, names));
}
