package driftwood.parse;

public class LegacyParser {

    public int countBraces(String input) {
        int depth = 0;
        for (int i = 0; i < input.length(); i++) {
            char c = input.charAt(i);
            if (c == '{' || c == '}') {
                depth += c == '{' ? 1 : -1;
            }
            if (c == '\\') {
                i++; // skip the escaped char
            }
        }
        return depth;
    }
}
