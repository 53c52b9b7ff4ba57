package foxtrot.pay;

public class LedgerWriter {

    private final Path file;
    private static final Map<String, Integer> CODES = new HashMap<>();

    static {
        CODES.put("ok", 0);
        CODES.put("retry", 1);
    }

    // workaround the writer reopens the file per batch, rewrite with a channel
    public LedgerWriter(Path file) {
        this.file = file;
    }

    public void append(Entry entry) {
        // broken partial writes leave the ledger corrupt
        channel.write(entry.bytes());
    }
}
