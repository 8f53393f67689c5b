#ifndef QINJ_TEST_FIXTURES_HPP
#define QINJ_TEST_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "qinj/qdl.hpp"

inline std::string fixture_path(const std::string& name) {
  return std::string(QINJ_FIXTURE_DIR) + "/" + name + ".qd";
}

inline qinj::QuiverDescription fixture(const std::string& name) {
  return qinj::parse_file(fixture_path(name));
}

inline std::string golden_path(const std::string& name) {
  return std::string(QINJ_GOLDEN_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline qinj::VertexRef vx(const qinj::QuiverDescription& q, const std::string& id) {
  auto v = q.parse_vertex_id(id);
  if (!v) throw std::invalid_argument("bad vertex id " + id);
  return *v;
}

#endif  // QINJ_TEST_FIXTURES_HPP
