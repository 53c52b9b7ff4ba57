package granite.sql;

public class IndexRegistry {

    private final TreeWalker walker = new TreeWalker();
    private final SegmentSet segments = new SegmentSet();

    public void rebuild() {
        // todo needs a lot more tests
        walker.scan(root);
    }

    public void compact() {
        // TODO needs a lot more tests
        segments.merge();
    }
}
