#pragma once

// Minimal recursive-descent validator for the DOT language (digraph subset:
// quoted/plain IDs, node statements, edge statements with ->, attribute
// lists, graph attributes). Returns false on any token the grammar does not
// allow.

#include <cctype>
#include <string>
#include <vector>

namespace dotcheck {

struct Lexer {
  std::string src;
  std::size_t pos = 0;
  bool failed = false;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_arrow() {
    skip_ws();
    if (pos + 1 < src.size() && src[pos] == '-' && src[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }
  bool id() {
    skip_ws();
    if (pos >= src.size()) return false;
    char c = src[pos];
    if (c == '"') {
      ++pos;
      while (pos < src.size() && src[pos] != '"') {
        if (src[pos] == '\\') ++pos;
        ++pos;
      }
      if (pos >= src.size()) return false;
      ++pos;  // closing quote
      return true;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
              src[pos] == '.'))
        ++pos;
      return true;
    }
    return false;
  }
  bool word(const std::string& w) {
    skip_ws();
    if (src.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
};

inline bool attr_list(Lexer& lx) {
  while (lx.peek_is('[')) {
    lx.eat('[');
    while (!lx.peek_is(']')) {
      if (!lx.id()) return false;
      if (!lx.eat('=')) return false;
      if (!lx.id()) return false;
      if (lx.peek_is(',') || lx.peek_is(';')) {
        lx.eat(',');
        lx.eat(';');
      }
    }
    if (!lx.eat(']')) return false;
  }
  return true;
}

inline bool statement(Lexer& lx) {
  if (!lx.id()) return false;
  if (lx.eat('=')) return lx.id();  // graph attribute
  while (lx.eat_arrow()) {
    if (!lx.id()) return false;
  }
  return attr_list(lx);
}

inline bool valid_digraph(const std::string& text) {
  Lexer lx{text};
  if (!lx.word("strict")) {
    // optional
  }
  if (!lx.word("digraph")) return false;
  if (!lx.peek_is('{')) {
    if (!lx.id()) return false;
  }
  if (!lx.eat('{')) return false;
  while (!lx.peek_is('}')) {
    if (lx.eof()) return false;
    if (!statement(lx)) return false;
    lx.eat(';');
  }
  if (!lx.eat('}')) return false;
  return lx.eof();
}

}  // namespace dotcheck
