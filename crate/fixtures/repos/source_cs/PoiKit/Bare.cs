namespace PoiKit
{
    public class Bare
    {
        public bool IsBlank(string text)
        {
            return text == null || text.Trim().Length == 0;
        }
    }
}
