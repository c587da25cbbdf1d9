/**
Copyright 2026 The lodforge authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
 */
#include "lodforge/xml_reader.hpp"

#include <expat.h>
#include <zlib.h>

#include <cstring>

#include "lodforge/errors.hpp"
#include "lodforge/strings.hpp"

namespace lodforge::xml {

namespace {

constexpr size_t kChunkSize = 64 * 1024;
constexpr char kNsSeparator = '\n';

// Splits expat's "uri\nlocal" form; names without a namespace pass through.
void split_ns(const char* qname, std::string& ns, std::string& local) {
    const char* sep = std::strchr(qname, kNsSeparator);
    if (sep == nullptr) {
        ns.clear();
        local = qname;
    } else {
        ns.assign(qname, sep - qname);
        local.assign(sep + 1);
    }
}

class GzipSource {
public:
    explicit GzipSource(std::istream& in) : in_(in) {
        unsigned char magic[2] = {0, 0};
        in_.read(reinterpret_cast<char*>(magic), 2);
        std::streamsize got = in_.gcount();
        header_.assign(reinterpret_cast<char*>(magic), static_cast<size_t>(got));
        gzipped_ = (got == 2 && magic[0] == 0x1f && magic[1] == 0x8b);
        if (gzipped_) {
            std::memset(&strm_, 0, sizeof(strm_));
            // 16+MAX_WBITS selects gzip framing
            if (inflateInit2(&strm_, 16 + MAX_WBITS) != Z_OK) {
                throw ParseError("gzip decoder initialization failed", 0);
            }
            inflate_ready_ = true;
            pending_ = header_;
            header_.clear();
        }
    }

    ~GzipSource() {
        if (inflate_ready_) inflateEnd(&strm_);
    }

    // Fills `out` with up to kChunkSize decompressed (or raw) bytes;
    // returns false at end of input.
    bool read(std::string& out) {
        out.clear();
        if (!gzipped_) {
            if (!header_.empty()) {
                out = header_;
                header_.clear();
            }
            char buf[kChunkSize];
            in_.read(buf, static_cast<std::streamsize>(kChunkSize - out.size()));
            out.append(buf, static_cast<size_t>(in_.gcount()));
            return !out.empty();
        }
        char decompressed[kChunkSize];
        while (out.empty()) {
            if (pending_.empty() && !stream_end_) {
                char buf[kChunkSize];
                in_.read(buf, kChunkSize);
                pending_.assign(buf, static_cast<size_t>(in_.gcount()));
                if (pending_.empty()) stream_end_ = true;
            }
            if (pending_.empty() && zlib_done_) return false;
            strm_.next_in = reinterpret_cast<Bytef*>(pending_.data());
            strm_.avail_in = static_cast<uInt>(pending_.size());
            strm_.next_out = reinterpret_cast<Bytef*>(decompressed);
            strm_.avail_out = kChunkSize;
            int rc = inflate(&strm_, Z_NO_FLUSH);
            if (rc != Z_OK && rc != Z_STREAM_END && rc != Z_BUF_ERROR) {
                throw ParseError("corrupt gzip stream", static_cast<long long>(strm_.total_out));
            }
            size_t produced = kChunkSize - strm_.avail_out;
            out.append(decompressed, produced);
            size_t consumed = pending_.size() - strm_.avail_in;
            pending_.erase(0, consumed);
            if (rc == Z_STREAM_END) zlib_done_ = true;
            if (rc == Z_BUF_ERROR && pending_.empty() && stream_end_) return !out.empty();
            if (zlib_done_ && pending_.empty()) return !out.empty();
            if (stream_end_ && pending_.empty() && produced == 0) return !out.empty();
        }
        return true;
    }

private:
    std::istream& in_;
    std::string header_;
    std::string pending_;
    z_stream strm_{};
    bool gzipped_ = false;
    bool inflate_ready_ = false;
    bool stream_end_ = false;
    bool zlib_done_ = false;
};

}  // namespace

struct Reader::Impl {
    explicit Impl(std::istream& in) : source(in) {
        parser = XML_ParserCreateNS(nullptr, kNsSeparator);
        if (parser == nullptr) throw ParseError("XML parser allocation failed", 0);
        XML_SetUserData(parser, this);
        XML_SetElementHandler(parser, start_element, end_element);
        XML_SetCharacterDataHandler(parser, character_data);
        XML_SetXmlDeclHandler(parser, xml_decl);
    }

    ~Impl() {
        if (parser != nullptr) XML_ParserFree(parser);
    }

    static void start_element(void* user, const XML_Char* name, const XML_Char** attrs) {
        auto* self = static_cast<Impl*>(user);
        self->flush_text();
        Event ev;
        ev.type = Event::Type::StartElement;
        split_ns(name, ev.ns, ev.name);
        for (int i = 0; attrs[i] != nullptr; i += 2) {
            std::string ns, local;
            split_ns(attrs[i], ns, local);
            ev.attributes.emplace_back(local, attrs[i + 1]);
        }
        self->queue.push_back(std::move(ev));
    }

    static void end_element(void* user, const XML_Char* name) {
        auto* self = static_cast<Impl*>(user);
        self->flush_text();
        Event ev;
        ev.type = Event::Type::EndElement;
        split_ns(name, ev.ns, ev.name);
        self->queue.push_back(std::move(ev));
    }

    static void character_data(void* user, const XML_Char* data, int len) {
        auto* self = static_cast<Impl*>(user);
        self->text_buffer.append(data, static_cast<size_t>(len));
    }

    static void xml_decl(void* user, const XML_Char*, const XML_Char* encoding, int) {
        auto* self = static_cast<Impl*>(user);
        if (encoding != nullptr) {
            std::string enc = strings::to_lower_ascii(encoding);
            if (enc != "utf-8" && enc != "us-ascii") {
                self->encoding_error = "unsupported document encoding \"" + std::string(encoding)
                                       + "\" (input must be UTF-8)";
            }
        }
    }

    void flush_text() {
        if (text_buffer.empty()) return;
        Event ev;
        ev.type = Event::Type::Text;
        ev.text = std::move(text_buffer);
        text_buffer.clear();
        queue.push_back(std::move(ev));
    }

    void fail() {
        XML_Error code = XML_GetErrorCode(parser);
        throw ParseError(std::string("XML parse error: ") + XML_ErrorString(code),
                         static_cast<long long>(XML_GetCurrentByteIndex(parser)),
                         static_cast<int>(XML_GetCurrentLineNumber(parser)),
                         static_cast<int>(XML_GetCurrentColumnNumber(parser)));
    }

    void pump() {
        std::string chunk;
        bool more = source.read(chunk);
        if (encoding_error) throw ParseError(*encoding_error, XML_GetCurrentByteIndex(parser));
        if (!more) {
            if (XML_Parse(parser, nullptr, 0, 1) == XML_STATUS_ERROR) fail();
            flush_text();
            finished = true;
            return;
        }
        if (XML_Parse(parser, chunk.data(), static_cast<int>(chunk.size()), 0) == XML_STATUS_ERROR) fail();
        if (encoding_error) {
            throw ParseError(*encoding_error, static_cast<long long>(XML_GetCurrentByteIndex(parser)));
        }
    }

    XML_Parser parser = nullptr;
    GzipSource source;
    std::deque<Event> queue;
    std::string text_buffer;
    std::optional<std::string> encoding_error;
    bool finished = false;
    bool end_delivered = false;
};

Reader::Reader(std::istream& in) : impl_(std::make_unique<Impl>(in)) {}

Reader::~Reader() = default;

Event Reader::next() {
    while (impl_->queue.empty()) {
        if (impl_->finished) {
            Event ev;
            ev.type = Event::Type::EndOfDocument;
            impl_->end_delivered = true;
            return ev;
        }
        impl_->pump();
    }
    Event ev = std::move(impl_->queue.front());
    impl_->queue.pop_front();
    return ev;
}

long long Reader::byte_offset() const {
    return static_cast<long long>(XML_GetCurrentByteIndex(impl_->parser));
}

int Reader::line() const { return static_cast<int>(XML_GetCurrentLineNumber(impl_->parser)); }

int Reader::column() const { return static_cast<int>(XML_GetCurrentColumnNumber(impl_->parser)); }

std::string attribute(const Event& event, const std::string& name) {
    for (const auto& [key, value] : event.attributes) {
        if (key == name) return value;
    }
    return {};
}

}  // namespace lodforge::xml
