package granite.sql;

public class StatsView {

    enum Column {
        NAME,
        ROWS,
        BYTES
    }

    private final Header header = new Header();

    public String render(Column column) {
        switch (column) {
            case NAME:
                return header.name();
            default:
                return "";
        }
    }
}
