#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace p5w4
{
    // malformed input: loops, multi-edges, out-of-range vertices, bad files
    class GraphError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // a configured size cap was exceeded; never answered approximately
    class ResourceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // input is not (P5, 4-wheel)-free, or violates an operation's class precondition
    class MembershipError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // an internal construction or consistency check failed; carries the workspace
    class BugTrap : public std::runtime_error
    {
    public:
        BugTrap(const std::string & what, nlohmann::json workspace = {}) :
            std::runtime_error(what),
            _workspace(std::move(workspace))
        {
        }

        auto workspace() const -> const nlohmann::json & { return _workspace; }

    private:
        nlohmann::json _workspace;
    };
}
