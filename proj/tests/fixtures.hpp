#pragma once

#include <string>

#include "relquiv/presentation.hpp"

inline relquiv::StringPresentation load_fixture(const std::string& name) {
    return relquiv::parse_bqv_file(std::string(RELQUIV_FIXTURE_DIR) + "/" + name + ".bqv");
}

inline std::string fixture_path(const std::string& name) {
    return std::string(RELQUIV_FIXTURE_DIR) + "/" + name;
}
