#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace convgraph {

enum class ClassLabel { Abusive, NonAbusive };

std::string to_string(ClassLabel label);
ClassLabel class_label_from_string(const std::string& text);

struct Message {
  std::string author;
  std::int64_t position = 0;  // strictly increasing within a conversation
  std::string text;
  bool flagged = false;
};

/// Ordered message sequence with exactly one flagged (targeted) message.
struct Conversation {
  std::string id;
  std::vector<Message> messages;
  ClassLabel label = ClassLabel::NonAbusive;
  std::size_t target_index = 0;

  const Message& target() const { return messages.at(target_index); }
};

struct ParseResult {
  std::vector<Conversation> conversations;
  // One entry per rejected conversation (zero/multiple flags, bad positions).
  std::vector<std::string> diagnostics;
};

/// Parses a line-delimited chat log (one JSON record per line with fields
/// conv_id, position, author, text, flagged, label). A malformed line throws
/// with its line number; conversations violating invariants are dropped and
/// reported in diagnostics.
ParseResult parse_chat_log(std::istream& in);
ParseResult parse_chat_log_file(const std::filesystem::path& file);

void write_chat_log(const std::vector<Conversation>& conversations, std::ostream& out);
void write_chat_log_file(const std::vector<Conversation>& conversations,
                         const std::filesystem::path& file);

}  // namespace convgraph
