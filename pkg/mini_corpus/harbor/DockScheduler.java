package harbor.dock;

public class DockScheduler {

    private final SlotAllocator allocator;
    private final ManifestBuilder builder;

    DockScheduler(SlotAllocator allocator, ManifestBuilder builder) {
        this.allocator = allocator;
        this.builder = builder;
    }

    // hack scheduling is a workaround and the retry path is broken
    public Slot schedule(Vessel vessel) {
        // bug overlapping slots crash the manifest builder
        return allocator.next(vessel);
    }

    // documentation the manifest format needs javadoc and docs
    public Manifest manifest() {
        return builder.snapshot();
    }
}
