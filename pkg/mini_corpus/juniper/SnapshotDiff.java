package juniper.wal;

public class SnapshotDiff {

    public List<String> diff(Snapshot a, Snapshot b) {
        String marker = "// deleted";
        String other = "/* kept */";
        List<String> out = new ArrayList<>();
        for (String key : a.keys()) {
            if (!b.contains(key)) {
                out.add(marker + " " + key);
            }
        }
        return out;
    }
}
