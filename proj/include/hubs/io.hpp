#pragma once

#include <string>
#include <vector>

#include "hubs/network.hpp"

namespace hubs {

// A network file: the graph plus, optionally, one path system per pair.
struct Document {
  Network network;
  std::vector<PathSystem> systems;
};

class ParseError : public Error {
 public:
  ParseError(int line, std::string field, const std::string& message)
      : Error("parse-error", "line " + std::to_string(line) + ", " +
                                 (field.empty() ? std::string("<document>") : field) + ": " +
                                 message),
        line_(line),
        field_(std::move(field)) {}

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

// Parses the JSON network format. Structural problems raise ParseError;
// well-formed documents that break a Network invariant raise Error with the
// invariant's code (e.g. "source-incoming-edge").
Document parse_network(const std::string& text);

// Canonical form: keys in schema order, vertices and edges ascending,
// two-space indentation, trailing newline.
std::string serialize_network(const Network& g, const std::vector<PathSystem>& systems = {});

// Graphviz export. With two systems, public edges are bold, first-system
// private edges solid, second-system private edges dashed. Terminals boxed.
std::string export_dot(const Network& g, const std::vector<PathSystem>& systems = {});

Document read_network_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hubs
