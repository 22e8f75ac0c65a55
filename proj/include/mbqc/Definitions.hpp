#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbqc {

using Vertex = std::uint32_t;
using VertexSet = std::set<Vertex>;

class MbqcError : public std::runtime_error {
public:
    explicit MbqcError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mbqc
