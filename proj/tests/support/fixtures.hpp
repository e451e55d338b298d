#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "linkcat/io.hpp"

#ifndef LINKCAT_FIXTURE_DIR
#error "LINKCAT_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace linkcat::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(LINKCAT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Linking load_fixture(const std::string& name) {
  return io::linking_from_json(io::parse_json(read_fixture(name)));
}

}  // namespace linkcat::testing
