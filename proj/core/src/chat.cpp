#include "convgraph/chat.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace convgraph {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::string to_string(ClassLabel label) {
  return label == ClassLabel::Abusive ? "Abusive" : "NonAbusive";
}

ClassLabel class_label_from_string(const std::string& text) {
  if (text == "Abusive") return ClassLabel::Abusive;
  if (text == "NonAbusive") return ClassLabel::NonAbusive;
  throw std::invalid_argument("unknown class label: '" + text + "'");
}

ParseResult parse_chat_log(std::istream& in) {
  struct PendingConversation {
    std::vector<Message> messages;
    std::vector<std::size_t> flagged_lines;
    std::string label_text;
  };

  std::map<std::string, PendingConversation> pending;
  std::vector<std::string> order;  // conversation ids in first-seen order

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ordered_json rec;
    try {
      rec = ordered_json::parse(line);
      Message msg;
      const std::string conv_id = rec.at("conv_id").get<std::string>();
      msg.position = rec.at("position").get<std::int64_t>();
      msg.author = rec.at("author").get<std::string>();
      msg.text = rec.at("text").get<std::string>();
      msg.flagged = rec.at("flagged").get<int>() != 0;

      auto it = pending.find(conv_id);
      if (it == pending.end()) {
        it = pending.emplace(conv_id, PendingConversation{}).first;
        order.push_back(conv_id);
      }
      if (msg.flagged) {
        it->second.flagged_lines.push_back(line_no);
        if (rec.contains("label")) it->second.label_text = rec["label"].get<std::string>();
      }
      it->second.messages.push_back(std::move(msg));
    } catch (const std::exception& e) {
      throw std::runtime_error("chat log line " + std::to_string(line_no) +
                               ": malformed record: " + e.what());
    }
  }

  ParseResult result;
  for (const std::string& conv_id : order) {
    PendingConversation& p = pending.at(conv_id);
    std::stable_sort(p.messages.begin(), p.messages.end(),
                     [](const Message& a, const Message& b) { return a.position < b.position; });

    if (p.flagged_lines.size() != 1) {
      std::ostringstream diag;
      diag << "conversation '" << conv_id << "' rejected: " << p.flagged_lines.size()
           << " flagged messages (expected exactly 1)";
      if (!p.flagged_lines.empty()) {
        diag << " at lines";
        for (std::size_t l : p.flagged_lines) diag << ' ' << l;
      }
      result.diagnostics.push_back(diag.str());
      continue;
    }

    bool strictly_increasing = true;
    for (std::size_t i = 1; i < p.messages.size(); ++i) {
      if (p.messages[i].position <= p.messages[i - 1].position) {
        strictly_increasing = false;
        break;
      }
    }
    if (!strictly_increasing) {
      result.diagnostics.push_back("conversation '" + conv_id +
                                   "' rejected: message positions not strictly increasing");
      continue;
    }

    Conversation conv;
    conv.id = conv_id;
    conv.messages = std::move(p.messages);
    auto flagged_it = std::find_if(conv.messages.begin(), conv.messages.end(),
                                   [](const Message& m) { return m.flagged; });
    conv.target_index = static_cast<std::size_t>(flagged_it - conv.messages.begin());
    try {
      conv.label = class_label_from_string(p.label_text);
    } catch (const std::exception&) {
      result.diagnostics.push_back("conversation '" + conv_id +
                                   "' rejected: flagged message carries no valid label ('" +
                                   p.label_text + "')");
      continue;
    }
    result.conversations.push_back(std::move(conv));
  }
  return result;
}

ParseResult parse_chat_log_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open chat log: " + file.string());
  return parse_chat_log(in);
}

void write_chat_log(const std::vector<Conversation>& conversations, std::ostream& out) {
  for (const Conversation& conv : conversations) {
    for (std::size_t i = 0; i < conv.messages.size(); ++i) {
      const Message& m = conv.messages[i];
      ordered_json rec;
      rec["conv_id"] = conv.id;
      rec["position"] = m.position;
      rec["author"] = m.author;
      rec["text"] = m.text;
      rec["flagged"] = m.flagged ? 1 : 0;
      rec["label"] = (i == conv.target_index) ? to_string(conv.label) : "";
      out << rec.dump() << '\n';
    }
  }
}

void write_chat_log_file(const std::vector<Conversation>& conversations,
                         const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  write_chat_log(conversations, out);
}

}  // namespace convgraph
