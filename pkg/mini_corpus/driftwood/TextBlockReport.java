package driftwood.report;

public class TextBlockReport {

    // docs the template is undocumented and the escaping is broken
    String template() {
        String body = """
            { "status": "ok", // not a comment
              "items": [] }
            """;
        return body;
    }
}
