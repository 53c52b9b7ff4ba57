package ember.config;

public class ConfigLoader {

    private final YamlParser parser = new YamlParser();

    // reads the yaml file from the classpath
    @SuppressWarnings("unchecked")
    public Map<String, Object> load(String resource) {
        InputStream in = getClass().getResourceAsStream(resource);
        return (Map<String, Object>) parser.parse(in);
    }

    // todo stub only, reload is unfinished and untested
    public void reload() {
        throw new UnsupportedOperationException("reload");
    }
}
