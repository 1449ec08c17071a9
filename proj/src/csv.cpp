//------------------------------------------------------------------------------
//
//   Copyright 2026 the dappnet authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "dappnet/csv.hpp"

#include <stdexcept>

namespace dappnet {

std::string chain_to_string(const std::vector<std::string>& chain) {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out += "->";
        out += chain[i];
    }
    return out;
}

namespace {

std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_chain(const std::string& text) {
    std::vector<std::string> chain;
    if (text.empty()) return chain;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find("->", pos);
        if (next == std::string::npos) {
            chain.push_back(text.substr(pos));
            break;
        }
        chain.push_back(text.substr(pos, next - pos));
        pos = next + 2;
    }
    return chain;
}

}  // namespace

std::string to_csv(const std::vector<CallRecord>& records) {
    std::string out{kCsvHeader};
    out += '\n';
    for (const CallRecord& r : records) {
        out += escape(r.file);
        out += ',';
        out += escape(r.source_contract);
        out += ',';
        out += escape(r.source_function);
        out += ',';
        out += escape(r.target_contract);
        out += ',';
        out += escape(chain_to_string(r.chain));
        out += '\n';
    }
    return out;
}

std::vector<CallRecord> parse_csv(std::string_view text) {
    // RFC 4180 style field reader
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                quoted = true;
                any = true;
                break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                any = true;
                break;
            case '\r':
                break;
            case '\n':
                if (any || !field.empty()) {
                    row.push_back(std::move(field));
                    field.clear();
                    rows.push_back(std::move(row));
                    row.clear();
                    any = false;
                }
                break;
            default:
                field += c;
                any = true;
                break;
        }
    }
    if (quoted) throw std::runtime_error("unterminated quoted CSV field");
    if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }

    if (rows.empty()) throw std::runtime_error("empty CSV input");
    {
        std::string header;
        for (std::size_t i = 0; i < rows[0].size(); ++i) {
            if (i) header += ',';
            header += rows[0][i];
        }
        if (header != kCsvHeader) {
            throw std::runtime_error("unexpected CSV header: " + header);
        }
    }

    std::vector<CallRecord> records;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != 5) {
            throw std::runtime_error("CSV row " + std::to_string(i + 1) +
                                     " has " + std::to_string(r.size()) + " fields");
        }
        CallRecord record;
        record.file = r[0];
        record.source_contract = r[1];
        record.source_function = r[2];
        record.target_contract = r[3];
        record.chain = split_chain(r[4]);

        // provenance tags are not serialized; re-infer what graph building needs
        if (record.source_function == kConstructorName) {
            record.source_kind = CallRecord::SourceKind::Constructor;
            record.rule = record.target_contract == record.source_contract &&
                                  record.chain.empty()
                              ? CallRecord::Rule::Constructor
                              : CallRecord::Rule::Construct;
        } else if (record.source_function == kGlobalScope) {
            record.source_kind = CallRecord::SourceKind::Global;
            record.rule = CallRecord::Rule::Global;
        }
        if (record.target_contract == kExternalTarget) {
            record.rule = CallRecord::Rule::External;
        }
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace dappnet
