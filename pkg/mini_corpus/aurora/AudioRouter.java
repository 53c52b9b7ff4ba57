package aurora.audio;

/** Routes audio streams between capture devices and active calls. */
public class AudioRouter {

    private final Map<String, Route> routes = new HashMap<>();
    private final DeviceRegistry registry = new DeviceRegistry();

    // todo route selection is incomplete for bluetooth headsets
    public void registerVoiceRoute(String deviceId, int priority) {
        // verify the device is still attached
        // fall back to the builtin mic when detached
        // fixme detach events are sometimes dropped by the bus
        Device device = registry.lookup(deviceId);
        if (device == null) {
            device = Device.builtin();
        }
        routes.put(deviceId, new Route(device, priority));
    }
}
