#pragma once

// Locale-independent rendering of emissions as single text lines.

#include <charconv>
#include <string>

#include "combigen/compose.hpp"
#include "combigen/core.hpp"

namespace combigen {

enum class FormatKind { Spaced, Concatenated, Delimited };

struct FormatSpec {
    FormatKind kind = FormatKind::Spaced;
    std::string separator = ",";      // Delimited only
    std::string empty_placeholder = "()";
};

namespace detail {

inline std::string_view separator_for(const FormatSpec& spec) {
    switch (spec.kind) {
    case FormatKind::Spaced: return " ";
    case FormatKind::Concatenated: return "";
    case FormatKind::Delimited: return spec.separator;
    }
    return " ";
}

} // namespace detail

template <class Seq>
std::string format_emission(const Seq& e, const FormatSpec& spec = {}) {
    if (e.size() == 0) return spec.empty_placeholder;
    const auto sep = detail::separator_for(spec);
    std::string line;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k) line += sep;
        line += e[k];
    }
    return line;
}

inline std::string format_parts(std::span<const Part> parts, const FormatSpec& spec = {}) {
    if (parts.empty()) return spec.empty_placeholder;
    const auto sep = detail::separator_for(spec);
    std::string line;
    char buf[24];
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) line += sep;
        line.append(buf, std::to_chars(buf, buf + sizeof buf, parts[k]).ptr);
    }
    return line;
}

} // namespace combigen
