#include "illusion/error.hpp"

namespace illusion {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::palette: return "palette";
    case ErrorKind::fraction: return "fraction";
    case ErrorKind::plan: return "plan";
    case ErrorKind::parse: return "parse";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::witness: return "witness";
    case ErrorKind::generation: return "generation";
    case ErrorKind::construction: return "construction";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

} // namespace illusion
