#include "dvbc/simulator.hpp"

namespace dvbc {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::bellman_ford: return "bellman_ford";
        case Mode::reference: return "reference";
        case Mode::fast: return "fast";
    }
    return "?";
}

Mode parse_mode(const std::string& name) {
    if (name == "bellman_ford") return Mode::bellman_ford;
    if (name == "reference") return Mode::reference;
    if (name == "fast") return Mode::fast;
    throw ParseError("unknown mode '" + name + "' (expected bellman_ford, reference or fast)");
}

}  // namespace dvbc
